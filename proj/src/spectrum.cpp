#include "morse/spectrum.hpp"

#include <cmath>
#include <sstream>

namespace morse {

std::size_t MorseVector::total() const {
    std::size_t t = 0;
    for (std::size_t c : counts) t += c;
    return t;
}

long long MorseVector::alternating_sum() const {
    long long s = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) s += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(counts[i]);
    return s;
}

std::string MorseVector::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(counts[i]);
    }
    return s + ")";
}

MorseVector normalize_vector(const MorseVector& v) {
    if (v.size() < 2) {
        if (v.size() == 1 && v[0] != 1)
            throw std::domain_error("cannot normalize " + v.str() + ": complex is disconnected");
        return v;
    }
    const long long second = static_cast<long long>(v[1]) - static_cast<long long>(v[0]) + 1;
    if (second < 0) throw std::domain_error("cannot normalize " + v.str() + ": negative entry (disconnected complex?)");
    MorseVector out = v;
    out.counts[0] = 1;
    out.counts[1] = static_cast<std::size_t>(second);
    return out;
}

void Spectrum::record(const MorseVector& v, std::uint64_t times) {
    if (!counts_.empty() && counts_.begin()->first.size() != v.size())
        throw std::invalid_argument("Morse vector " + v.str() + " has a different dimension than the spectrum");
    if (times == 0) return;
    counts_[v] += times;
    total_ += times;
}

void Spectrum::merge(const Spectrum& other) {
    for (const auto& [v, n] : other.counts_) record(v, n);
}

Spectrum merge(Spectrum a, const Spectrum& b) {
    a.merge(b);
    return a;
}

std::uint64_t Spectrum::count(const MorseVector& v) const {
    const auto it = counts_.find(v);
    return it == counts_.end() ? 0 : it->second;
}

double Spectrum::frequency(const MorseVector& v) const {
    return total_ == 0 ? 0.0 : static_cast<double>(count(v)) / static_cast<double>(total_);
}

MorseVector Spectrum::mode() const {
    if (counts_.empty()) throw std::domain_error("mode of an empty spectrum");
    auto best = counts_.begin();
    for (auto it = counts_.begin(); it != counts_.end(); ++it)
        if (it->second > best->second) best = it;
    return best->first;
}

Rational c_avg(const Spectrum& s) {
    if (s.empty()) throw std::domain_error("c_avg of an empty spectrum");
    Rational sum = 0;
    for (const auto& [v, n] : s.counts()) sum += Rational(v.total()) * n;
    return sum / s.total();
}

Rational c_avg_normalized(const Spectrum& s) {
    if (s.empty()) throw std::domain_error("c_avg of an empty spectrum");
    Rational sum = 0;
    for (const auto& [v, n] : s.counts()) sum += Rational(normalize_vector(v).total()) * n;
    return sum / s.total();
}

Rational c_avg(const ExactSpectrum& s) {
    if (s.empty()) throw std::domain_error("c_avg of an empty spectrum");
    Rational sum = 0;
    for (const auto& [v, p] : s) sum += p * v.total();
    return sum;
}

Rational c_avg_normalized(const ExactSpectrum& s) { return c_avg(normalize_spectrum(s)); }

ExactSpectrum normalize_spectrum(const ExactSpectrum& s) {
    ExactSpectrum out;
    for (const auto& [v, p] : s) out[normalize_vector(v)] += p;
    return out;
}

double total_variation(const Spectrum& observed, const ExactSpectrum& exact) {
    double tv = 0.0;
    for (const auto& [v, p] : exact) tv += std::abs(observed.frequency(v) - to_double(p));
    for (const auto& [v, n] : observed.counts())
        if (!exact.contains(v)) tv += observed.frequency(v);
    return tv / 2.0;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_string(const Rational& r) {
    std::ostringstream out;
    out << boost::multiprecision::numerator(r);
    if (boost::multiprecision::denominator(r) != 1) out << '/' << boost::multiprecision::denominator(r);
    return out.str();
}

ExactSpectrum analytic_spectrum_A(int k) {
    if (k < 1) throw std::invalid_argument("analytic_spectrum_A needs k >= 1");
    return {{MorseVector{1, 2}, Rational(6, 6 + k)}, {MorseVector{2, 3}, Rational(k, 6 + k)}};
}

ExactSpectrum analytic_spectrum_B(int k, int s) {
    if (k < 1 || s < 1) throw std::invalid_argument("analytic_spectrum_B needs k >= 1 and s >= 1");
    const Rational p(6, 6 + k);
    const Rational q = 1 - p;
    ExactSpectrum out;
    Rational binom = 1;
    for (int i = 0; i <= s; ++i) {
        Rational term = binom;
        for (int j = 0; j < s - i; ++j) term *= p;
        for (int j = 0; j < i; ++j) term *= q;
        const auto ui = static_cast<std::size_t>(i);
        const auto us = static_cast<std::size_t>(s);
        out[MorseVector{1 + ui, 2 * us + ui}] = term;
        binom = binom * (s - i) / (i + 1);
    }
    return out;
}

double pathological_rate(int k, double edges) {
    const double base = 6.0 / (6.0 + k);
    return std::pow(base, edges / (6.0 + k));
}

int pathological_argmin(double edges, int k_max) {
    // Compare logarithms; the rate itself underflows for large N.
    int best = 1;
    double best_log = 0.0;
    for (int k = 1; k <= k_max; ++k) {
        const double value = edges / (6.0 + k) * std::log(6.0 / (6.0 + k));
        if (k == 1 || value < best_log) {
            best = k;
            best_log = value;
        }
    }
    return best;
}

double pathological_exponent() { return (std::log(8.0) - std::log(3.0)) / 16.0; }

nlohmann::ordered_json spectrum_report(const Spectrum& s, long long euler,
                                       const std::optional<std::vector<std::size_t>>& betti,
                                       std::uint64_t master_seed, const std::string& strategy) {
    nlohmann::ordered_json report;
    report["rounds"] = s.total();
    auto vectors = nlohmann::ordered_json::array();
    for (const auto& [v, n] : s.counts()) {
        nlohmann::ordered_json entry;
        entry["vector"] = v.counts;
        entry["count"] = n;
        entry["freq"] = s.frequency(v);
        vectors.push_back(std::move(entry));
    }
    report["vectors"] = std::move(vectors);
    report["c_avg"] = s.empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(to_double(c_avg(s)));
    try {
        report["c_avg_normalized"] = to_double(c_avg_normalized(s));
    } catch (const std::domain_error&) {
        report["c_avg_normalized"] = nullptr;
    }
    report["euler"] = euler;
    if (betti) report["betti_gf2"] = *betti;
    report["master_seed"] = master_seed;
    report["strategy"] = strategy;
    return report;
}

}  // namespace morse
