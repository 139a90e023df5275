#include "morse/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "morse/complex_io.hpp"
#include "morse/engine.hpp"
#include "morse/generators.hpp"
#include "morse/hasse.hpp"
#include "morse/random.hpp"
#include "morse/spectrum.hpp"
#include "morse/topology.hpp"

namespace morse::cli {

namespace {

using Json = nlohmann::ordered_json;

// Betti numbers are reported only below this size.
constexpr std::size_t kBettiBudget = 200'000;

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) parts.push_back(cur);
    if (!s.empty() && s.back() == sep) parts.emplace_back();
    return parts;
}

template <typename T>
T parse_number(const std::string& token, const std::string& context) {
    T value{};
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw UsageError("invalid number '" + token + "' in " + context);
    return value;
}

double parse_probability(const std::string& token, const std::string& context) {
    std::size_t used = 0;
    double value = 0;
    try {
        value = std::stod(token, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != token.size() || token.empty()) throw UsageError("invalid probability '" + token + "' in " + context);
    return value;
}

struct Common {
    std::string in;
    std::string gen;
    std::string format = "json";
    std::string out;
};

void add_common(CLI::App* cmd, Common& c) {
    auto* in = cmd->add_option("--in", c.in, "Complex file (text facet list or JSON)");
    auto* gen = cmd->add_option("--gen", c.gen, "Generator spec, e.g. A:1, bipyramid, cyclic:4:50");
    in->excludes(gen);
    gen->excludes(in);
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--out", c.out, "Write output to this path instead of stdout");
}

SimplicialComplex load(const Common& c) {
    if (!c.in.empty()) return read_complex_file(c.in);
    if (!c.gen.empty()) return generate(c.gen);
    throw UsageError("one of --in or --gen is required");
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("MORSE_SEED")) return parse_number<std::uint64_t>(env, "MORSE_SEED");
    return 0;
}

Json face_json(const SimplicialComplex& c, FaceRef f) {
    const auto v = c.face(f);
    return Json(std::vector<Vertex>(v.begin(), v.end()));
}

void emit(const Common& c, const std::string& text, std::ostream& out) {
    if (c.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(c.out);
    if (!file) throw ParseError("cannot write " + c.out);
    file << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::optional<BettiVector> betti_if_small(const SimplicialComplex& c) {
    if (c.total_faces() > kBettiBudget) return std::nullopt;
    return betti_gf2(c);
}

MorseVector parse_vector(const std::string& s) {
    std::vector<std::size_t> counts;
    for (const auto& tok : split(s, ',')) counts.push_back(parse_number<std::size_t>(tok, "--vector"));
    if (counts.empty()) throw UsageError("empty --vector");
    return MorseVector(std::move(counts));
}

}  // namespace

SimplicialComplex generate(const std::string& spec) {
    if (spec.rfind("bsd:", 0) == 0) return barycentric_subdivision(read_complex_file(spec.substr(4)));
    const auto parts = split(spec, ':');
    const std::string& kind = parts.empty() ? spec : parts[0];
    auto arity = [&](std::size_t lo, std::size_t hi) {
        if (parts.size() - 1 < lo || parts.size() - 1 > hi) throw UsageError("wrong number of parameters in '" + spec + "'");
    };
    auto num = [&](std::size_t i) { return parse_number<int>(parts[i], "'" + spec + "'"); };
    auto seed = [&](std::size_t i) {
        return parts.size() > i ? parse_number<std::uint64_t>(parts[i], "'" + spec + "'") : std::uint64_t{0};
    };

    if (kind == "bipyramid") return arity(0, 0), bipyramid();
    if (kind == "dunce8") return arity(0, 0), dunce_hat_8();
    if (kind == "A") return arity(1, 1), graph_A(num(1));
    if (kind == "B") return arity(2, 2), bouquet_B(num(1), num(2));
    if (kind == "C") return arity(2, 2), complex_C(num(1), num(2));
    if (kind == "cyclic") return arity(2, 2), cyclic_polytope_boundary(num(1), num(2));
    if (kind == "stacked") return arity(2, 3), stacked_sphere(num(1), num(2), seed(3));
    if (kind == "lm") return arity(2, 3), linial_meshulam(num(1), parse_probability(parts[2], "'" + spec + "'"), seed(3));
    if (kind == "simplex") return arity(1, 1), simplex(num(1));
    if (kind == "boundary") return arity(1, 1), boundary_of_simplex(num(1));
    throw UsageError("unknown generator '" + spec + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Empirical discrete Morse spectra of simplicial complexes"};
    app.require_subcommand(1);

    Common common;
    std::size_t rounds = 1;
    std::optional<std::uint64_t> seed_flag;
    std::string strategy_name = "random";
    bool normalize = false;
    std::string workers_flag = "1";
    std::size_t max_faces = ExactBudget{}.max_faces;
    std::vector<std::string> vectors;

    auto* run_cmd = app.add_subcommand("run", "Sample the discrete Morse spectrum");
    add_common(run_cmd, common);
    auto* rounds_opt = run_cmd->add_option("--rounds", rounds, "Number of rounds")->check(CLI::PositiveNumber);
    run_cmd->add_option("--seed", seed_flag, "Master seed (fallback: MORSE_SEED, then 0)");
    run_cmd->add_option("--strategy", strategy_name)->check(CLI::IsMember({"random", "lex", "revlex"}));
    run_cmd->add_flag("--normalize", normalize, "Finish 1-dimensional remainders deterministically");
    run_cmd->add_option("--workers", workers_flag, "Worker threads or 'auto'");

    auto* gen_cmd = app.add_subcommand("gen", "Write a generated complex");
    std::string gen_spec;
    gen_cmd->add_option("spec", gen_spec, "Generator spec")->required();
    std::string gen_format = "text";
    gen_cmd->add_option("--format", gen_format)->check(CLI::IsMember({"json", "text"}));
    std::string gen_out;
    gen_cmd->add_option("--out", gen_out);

    auto* exact_cmd = app.add_subcommand("exact", "Exact spectrum by full enumeration");
    add_common(exact_cmd, common);
    exact_cmd->add_option("--max-faces", max_faces, "Face budget");

    auto* betti_cmd = app.add_subcommand("betti", "GF(2) Betti numbers");
    add_common(betti_cmd, common);
    auto* pi1_cmd = app.add_subcommand("pi1", "Edge-path group presentation");
    add_common(pi1_cmd, common);

    auto* check_cmd = app.add_subcommand("check", "Check Morse vectors against Euler and Betti numbers");
    add_common(check_cmd, common);
    check_cmd->add_option("--vector", vectors, "Comma separated vector, e.g. 1,0,1")->required();

    auto* trace_cmd = app.add_subcommand("trace", "One round with its full trace, replayed and verified");
    add_common(trace_cmd, common);
    trace_cmd->add_option("--seed", seed_flag, "Master seed; the round uses the seed of round 0");
    trace_cmd->add_option("--strategy", strategy_name)->check(CLI::IsMember({"random", "lex", "revlex"}));
    trace_cmd->add_flag("--normalize", normalize);

    std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        const Selection selection = *parse_selection(strategy_name);
        const Strategy strategy{selection, normalize};
        const bool text = common.format == "text";

        if (*run_cmd) {
            if (selection != Selection::UniformRandom) {
                if (rounds_opt->count() > 0 && rounds != 1)
                    throw UsageError("lex and revlex are deterministic; use --rounds 1");
                rounds = 1;
            }
            unsigned workers = 1;
            if (workers_flag == "auto")
                workers = 0;
            else
                workers = parse_number<unsigned>(workers_flag, "--workers");
            if (workers_flag != "auto" && workers == 0) throw UsageError("--workers must be positive or 'auto'");

            const SimplicialComplex complex = load(common);
            const std::uint64_t seed = resolve_seed(seed_flag);
            err << "running " << rounds << " rounds on f=" << Json(complex.f_vector()).dump() << "\n";
            const HasseDiagram hasse(complex);
            const Spectrum spectrum = run_many(hasse, rounds, strategy, seed, workers);
            const auto betti = betti_if_small(complex);

            Json report = spectrum_report(spectrum, complex.euler_characteristic(),
                                          betti ? std::optional(betti->values) : std::nullopt, seed,
                                          std::string(to_string(selection)));
            report["normalized"] = normalize;
            if (betti) {
                Json checks = Json::array();
                for (const auto& [v, n] : spectrum.counts()) {
                    const MorseCheck c = check_morse_output(complex, v, *betti);
                    checks.push_back(Json{{"vector", v.counts}, {"pass", c.passed()}, {"slack", c.slack}});
                }
                report["morse_check"] = std::move(checks);
            }

            if (!text) {
                emit(common, dump(report), out);
            } else {
                std::ostringstream s;
                s << "rounds " << spectrum.total() << "\n";
                for (const auto& [v, n] : spectrum.counts()) s << v.str() << " " << n << " " << spectrum.frequency(v) << "\n";
                s << "c_avg " << report["c_avg"].dump() << "\n";
                s << "c_avg_normalized " << report["c_avg_normalized"].dump() << "\n";
                s << "euler " << complex.euler_characteristic() << "\n";
                if (betti) s << "betti_gf2 " << Json(betti->values).dump() << "\n";
                emit(common, s.str(), out);
            }
            return kOk;
        }

        if (*gen_cmd) {
            const SimplicialComplex complex = generate(gen_spec);
            Common target;
            target.out = gen_out;
            emit(target, write_complex_string(complex, gen_format == "json" ? FileFormat::Json : FileFormat::Text), out);
            return kOk;
        }

        if (*exact_cmd) {
            const SimplicialComplex complex = load(common);
            ExactBudget budget;
            budget.max_faces = max_faces;
            const ExactSpectrum exact = exact_spectrum_bruteforce(complex, budget);
            if (text) {
                std::ostringstream s;
                for (const auto& [v, p] : exact) s << v.str() << " " << to_string(p) << "\n";
                emit(common, s.str(), out);
                return kOk;
            }
            Json report;
            Json entries = Json::array();
            for (const auto& [v, p] : exact)
                entries.push_back(Json{{"vector", v.counts}, {"probability", to_string(p)}, {"value", to_double(p)}});
            report["vectors"] = std::move(entries);
            report["c_avg"] = to_string(c_avg(exact));
            report["euler"] = complex.euler_characteristic();
            emit(common, dump(report), out);
            return kOk;
        }

        if (*betti_cmd) {
            const SimplicialComplex complex = load(common);
            const BettiVector b = betti_gf2(complex);
            if (text) {
                emit(common, "betti_gf2 " + Json(b.values).dump() + "\n", out);
                return kOk;
            }
            Json report;
            report["f_vector"] = complex.f_vector();
            report["euler"] = complex.euler_characteristic();
            report["betti_gf2"] = b.values;
            emit(common, dump(report), out);
            return kOk;
        }

        if (*pi1_cmd) {
            const SimplicialComplex complex = load(common);
            const GroupPresentation p = edge_path_presentation(complex);
            if (text) {
                std::ostringstream s;
                s << "generators " << p.generators << "\nrelators " << p.relators.size() << "\n";
                emit(common, s.str(), out);
                return kOk;
            }
            Json report;
            report["generators"] = p.generators;
            report["relators"] = p.relators.size();
            report["words"] = p.relators;
            emit(common, dump(report), out);
            return kOk;
        }

        if (*check_cmd) {
            const SimplicialComplex complex = load(common);
            const BettiVector b = betti_gf2(complex);
            Json report;
            report["euler"] = complex.euler_characteristic();
            report["betti_gf2"] = b.values;
            Json results = Json::array();
            bool all = true;
            for (const auto& s : vectors) {
                const MorseVector v = parse_vector(s);
                const MorseCheck c = check_morse_output(complex, v, b);
                all = all && c.passed();
                results.push_back(Json{{"vector", v.counts},
                                       {"euler_ok", c.euler_ok},
                                       {"inequalities_ok", c.inequalities_ok},
                                       {"slack", c.slack},
                                       {"pass", c.passed()}});
            }
            report["results"] = std::move(results);
            emit(common, dump(report), out);
            return all ? kOk : kCheckFailed;
        }

        if (*trace_cmd) {
            const SimplicialComplex complex = load(common);
            const HasseDiagram hasse(complex);
            const std::uint64_t seed = resolve_seed(seed_flag);
            const RoundResult r = run_once(hasse, strategy, round_seed(seed, 0));
            const TraceVerdict verdict = verify_trace(hasse, r.trace);
            Json report;
            report["vector"] = r.vector.counts;
            report["verified"] = verdict.ok;
            report["replayed_vector"] = verdict.vector.counts;
            report["collapsibility_certificate"] = verdict.collapsibility_certificate;
            if (!verdict.ok) report["failure"] = Json{{"event", verdict.failed_event}, {"reason", verdict.reason}};
            Json events = Json::array();
            for (const CollapseEvent& ev : r.trace.events) {
                if (ev.kind == CollapseEvent::Kind::Pair)
                    events.push_back(Json{{"type", "pair"}, {"face", face_json(complex, ev.face)}, {"coface", face_json(complex, ev.coface)}});
                else
                    events.push_back(Json{{"type", "critical"}, {"face", face_json(complex, ev.face)}});
            }
            report["events"] = std::move(events);
            emit(common, dump(report), out);
            return verdict.ok ? kOk : kCheckFailed;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kBudgetExceeded;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    }
    return kUsage;
}

}  // namespace morse::cli
