#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "morse/complex.hpp"

namespace morse {

using Rational = boost::multiprecision::cpp_rational;

/// Critical-face counts (c_0, ..., c_d) of one round.
struct MorseVector {
    std::vector<std::size_t> counts;

    MorseVector() = default;
    explicit MorseVector(std::vector<std::size_t> c) : counts(std::move(c)) {}
    MorseVector(std::initializer_list<std::size_t> c) : counts(c) {}

    std::size_t size() const { return counts.size(); }
    std::size_t operator[](std::size_t i) const { return counts[i]; }
    std::size_t total() const;
    long long alternating_sum() const;
    std::string str() const;  // "(1,0,1)"

    friend auto operator<=>(const MorseVector&, const MorseVector&) = default;
};

/// Maps (c_0, c_1, c_2, ...) to (1, c_1 - c_0 + 1, c_2, ...). Throws
/// std::domain_error when the second entry would be negative, which only
/// happens for disconnected input.
MorseVector normalize_vector(const MorseVector& v);

/// Observed vectors with multiplicities. Vectors iterate in lexicographic order.
class Spectrum {
public:
    /// Throws std::invalid_argument if `v` has a different length than
    /// vectors already recorded.
    void record(const MorseVector& v, std::uint64_t times = 1);
    /// Commutative and associative; same length requirement as record().
    void merge(const Spectrum& other);

    std::uint64_t total() const { return total_; }
    bool empty() const { return total_ == 0; }
    std::uint64_t count(const MorseVector& v) const;
    double frequency(const MorseVector& v) const;
    const std::map<MorseVector, std::uint64_t>& counts() const { return counts_; }
    /// Most frequent vector; ties go to the lexicographically smaller one.
    MorseVector mode() const;

    friend bool operator==(const Spectrum&, const Spectrum&) = default;

private:
    std::map<MorseVector, std::uint64_t> counts_;
    std::uint64_t total_ = 0;
};

Spectrum merge(Spectrum a, const Spectrum& b);

/// Exact distribution over Morse vectors.
using ExactSpectrum = std::map<MorseVector, Rational>;

/// Mean number of critical cells, sum_v count(v) * |v| / total.
/// Throws std::domain_error on an empty spectrum.
Rational c_avg(const Spectrum& s);
/// Same after normalize_vector on every entry.
Rational c_avg_normalized(const Spectrum& s);
Rational c_avg(const ExactSpectrum& s);
Rational c_avg_normalized(const ExactSpectrum& s);

/// Probability mass merged by normalized vector.
ExactSpectrum normalize_spectrum(const ExactSpectrum& s);

/// Total-variation distance between observed frequencies and `exact`.
double total_variation(const Spectrum& observed, const ExactSpectrum& exact);

double to_double(const Rational& r);
std::string to_string(const Rational& r);  // "6/7", "1"

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ExactBudget {
    std::size_t max_faces = 96;
    std::size_t max_states = 2'000'000;
};

/// Exact spectrum of the random strategy by exploring every branch of the
/// decision tree with rational weights. Distinct live-face sets are memoized.
/// Throws BudgetExceeded when the complex or the state space is too large.
ExactSpectrum exact_spectrum_bruteforce(const SimplicialComplex& complex, ExactBudget budget = {});

/// Two triangles joined by a k-edge path: {(1,2): 6/(6+k), (2,3): k/(6+k)}.
/// Throws std::invalid_argument for k < 1.
ExactSpectrum analytic_spectrum_A(int k);

/// Bouquet of s copies: (1+i, 2s+i) with probability C(s,i) p^(s-i) (1-p)^i,
/// p = 6/(6+k). Throws std::invalid_argument for k < 1 or s < 1.
ExactSpectrum analytic_spectrum_B(int k, int s);

/// Chance (6/(6+k))^(N/(6+k)) of the optimum on a bouquet of A-graphs with
/// N edges in total.
double pathological_rate(int k, double edges);
/// Integer k in [1, k_max] minimizing pathological_rate; independent of N.
int pathological_argmin(double edges, int k_max = 1000);
/// c with pathological_rate(10, N) = exp(-c N), i.e. (log 8 - log 3) / 16.
double pathological_exponent();

/// Report fields in fixed order: rounds, vectors, c_avg, c_avg_normalized,
/// euler, betti_gf2 (only when given), master_seed, strategy.
nlohmann::ordered_json spectrum_report(const Spectrum& s, long long euler,
                                       const std::optional<std::vector<std::size_t>>& betti,
                                       std::uint64_t master_seed, const std::string& strategy);

}  // namespace morse
