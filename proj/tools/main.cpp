// SPDX-License-Identifier: Apache-2.0
//
// dedesum: exact Dedekind-sum family evaluation, the coin-exchange counting
// formula built from Fourier-Dedekind sums, reciprocity-law verification
// suites, and 2D signed unimodular cone decomposition. All values are exact
// rationals printed as "p/q" ("/1" omitted); nothing is ever emitted as a
// decimal.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dedesum/cone2d.hpp"
#include "dedesum/dedekind.hpp"
#include "dedesum/errors.hpp"
#include "dedesum/fourier.hpp"
#include "dedesum/identities.hpp"
#include "dedesum/partition.hpp"
#include "dedesum/rational.hpp"
#include "dedesum/sawtooth.hpp"
#include "dedesum/verify.hpp"

namespace {

using dedesum::Integer;
using dedesum::Rational;
using json = nlohmann::json;

Integer parse_integer(const std::string& s, const std::string& what) {
    std::string_view v = s;
    if (!v.empty() && (v.front() == '+' || v.front() == '-')) v.remove_prefix(1);
    if (v.empty() || v.find_first_not_of("0123456789") != std::string_view::npos)
        throw dedesum::ValidationError(what + ": '" + s + "' is not an integer");
    return Integer(s, 10);
}

std::int64_t parse_i64(const std::string& s, const std::string& what) {
    Integer z = parse_integer(s, what);
    if (!z.fits_slong_p())
        throw dedesum::ValidationError(what + ": '" + s + "' is out of range");
    return mpz_get_si(z.get_mpz_t());
}

std::vector<std::int64_t> parse_parts(const std::string& csv) {
    std::vector<std::int64_t> parts;
    if (csv.empty()) return parts;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        parts.push_back(parse_i64(item, "parts"));
    return parts;
}

dedesum::cone2d::Vec2 parse_vec(const std::string& s) {
    auto comma = s.find(',');
    std::string body = s;
    if (!body.empty() && body.front() == '(' && body.back() == ')') {
        body = body.substr(1, body.size() - 2);
        comma = body.find(',');
    }
    if (comma == std::string::npos)
        throw dedesum::ValidationError("cone generator '" + s +
                                       "' must look like ux,uy");
    return {static_cast<long>(parse_i64(body.substr(0, comma), "generator")),
            static_cast<long>(parse_i64(body.substr(comma + 1), "generator"))};
}

struct Output {
    bool as_json = false;
    std::string out_path;

    void emit(const std::string& plain, const json& payload) const {
        if (as_json)
            std::cout << payload.dump(2) << "\n";
        else
            std::cout << plain << "\n";
        if (!out_path.empty()) {
            std::ofstream f(out_path);
            if (!f) throw dedesum::ValidationError("cannot write to " + out_path);
            f << payload.dump(2) << "\n";
        }
    }
};

std::string term_line(const dedesum::cone2d::SignedConeTerm& t) {
    std::ostringstream os;
    os << (t.sign > 0 ? "+" : "-") << " x^(" << t.apex.x << "," << t.apex.y
       << ") / (1 - x^(" << t.b1.x << "," << t.b1.y << ")) (1 - x^(" << t.b2.x
       << "," << t.b2.y << "))";
    return os.str();
}

json term_json(const dedesum::cone2d::SignedConeTerm& t) {
    return {{"sign", t.sign},
            {"apex", {t.apex.x.get_str(), t.apex.y.get_str()}},
            {"b1", {t.b1.x.get_str(), t.b1.y.get_str()}},
            {"b2", {t.b2.x.get_str(), t.b2.y.get_str()}}};
}

int run(int argc, char** argv) {
    CLI::App app{
        "Exact Dedekind, Dedekind-Rademacher, Zagier and Fourier-Dedekind sums, "
        "the restricted-partition counting formula built from them, reciprocity "
        "verification suites, and 2D unimodular cone decomposition."};
    app.require_subcommand(1);
    Output out;
    app.add_flag("--json", out.as_json, "emit a JSON document on stdout");
    app.add_option("--out", out.out_path, "also write the JSON report to a file");

    std::string arg_a, arg_b, arg_n = "0", arg_x, arg_y, arg_parts;
    std::int64_t arg_mod = 1;

    auto* ded = app.add_subcommand("dedekind", "classical Dedekind sum s(a,b)");
    bool naive = false;
    ded->add_option("a", arg_a)->required();
    ded->add_option("b", arg_b)->required();
    ded->add_flag("--naive", naive, "force the O(b) direct summation");

    auto* rad = app.add_subcommand("rademacher",
                                   "Dedekind-Rademacher sum s(a,b;x,y)");
    rad->add_option("a", arg_a)->required();
    rad->add_option("b", arg_b)->required();
    rad->add_option("--x", arg_x, "rational shift x (use --x=-p/q for negatives)")
        ->required();
    rad->add_option("--y", arg_y, "rational shift y")->required();

    auto* knu = app.add_subcommand("knuth", "shifted sum s(a,b; n/b, 0)");
    knu->add_option("a", arg_a)->required();
    knu->add_option("b", arg_b)->required();
    knu->add_option("n", arg_n)->required();

    auto* fou = app.add_subcommand("fourier",
                                   "Fourier-Dedekind sum sigma_n(parts; a0)");
    fou->add_option("n", arg_n)->required();
    fou->add_option("--mod", arg_mod, "the modulus a0")->required();
    fou->add_option("--parts", arg_parts, "comma-separated a1,...,ad (may be empty)");

    std::vector<std::string> zargs;
    auto* zag = app.add_subcommand("zagier",
                                   "higher-dimensional Dedekind sum s(a0; a1,...,ad)");
    zag->add_option("args", zargs, "a0 a1 ... ad")->expected(-1)->required();

    auto* par = app.add_subcommand("partition",
                                   "restricted partition (coin-exchange) count");
    std::string method = "formula";
    bool interior = false;
    par->add_option("n", arg_n)->required();
    par->add_option("--parts", arg_parts, "comma-separated a0,...,ad")->required();
    par->add_option("--method", method, "dp | formula")
        ->check(CLI::IsMember({"dp", "formula"}));
    par->add_flag("--interior", interior, "count representations with all k_j >= 1");

    auto* qps = app.add_subcommand("quasipoly",
                                   "counting quasipolynomial: q-polynomial plus "
                                   "periodic Fourier-Dedekind tables");
    qps->add_option("--parts", arg_parts)->required();

    auto* qcmd = app.add_subcommand("q", "polynomial part q(parts, n)");
    qcmd->add_option("n", arg_n)->required();
    qcmd->add_option("--parts", arg_parts)->required();

    auto* ver = app.add_subcommand("verify", "run a reciprocity verification suite");
    std::string suite;
    dedesum::verify::SuiteOptions vopts;
    ver->add_option("suite", suite,
                    "dedekind|rademacher|gessel|general|zagier|raddedsum|main|"
                    "ehrhart|cone2d|all")
        ->required();
    ver->add_option("--max", vopts.max, "range cap (suite-specific default)");
    ver->add_option("--seed", vopts.seed, "seed for randomized sweeps");

    auto* cone = app.add_subcommand("cone2d",
                                    "signed unimodular decomposition of a 2D cone");
    std::vector<std::string> gens;
    std::int64_t truncate = -1;
    cone->add_option("--gen", gens, "two generators, each ux,uy")
        ->expected(2)
        ->required();
    cone->add_option("--truncate", truncate,
                     "also check the expansion against brute force up to this box");

    auto* ben = app.add_subcommand("bench", "timing comparisons");
    std::string bench_what;
    unsigned bench_bits = 256;
    std::uint64_t bench_seed = 1;
    ben->add_option("what", bench_what, "dedekind")->required();
    ben->add_option("--bits", bench_bits, "bit size of the random inputs");
    ben->add_option("--seed", bench_seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (*ded) {
        Integer a = parse_integer(arg_a, "a"), b = parse_integer(arg_b, "b");
        Rational s = naive ? dedesum::dedekind_naive(a, b)
                           : (dedesum::gcd(a, b) == 1 ? dedesum::dedekind_fast(a, b)
                                                      : dedesum::dedekind_naive(a, b));
        out.emit(s.str(), {{"op", "dedekind"},
                           {"a", a.get_str()},
                           {"b", b.get_str()},
                           {"result", s.str()}});
    } else if (*rad) {
        Integer a = parse_integer(arg_a, "a"), b = parse_integer(arg_b, "b");
        Rational x = Rational::parse(arg_x), y = Rational::parse(arg_y);
        Rational s = dedesum::rademacher_sum(a, b, x, y);
        out.emit(s.str(), {{"op", "rademacher"},
                           {"a", a.get_str()},
                           {"b", b.get_str()},
                           {"x", x.str()},
                           {"y", y.str()},
                           {"result", s.str()}});
    } else if (*knu) {
        Integer a = parse_integer(arg_a, "a"), b = parse_integer(arg_b, "b");
        Integer n = parse_integer(arg_n, "n");
        Rational s = dedesum::knuth_sum(a, b, n);
        out.emit(s.str(), {{"op", "knuth"},
                           {"a", a.get_str()},
                           {"b", b.get_str()},
                           {"n", n.get_str()},
                           {"result", s.str()}});
    } else if (*fou) {
        Integer n = parse_integer(arg_n, "n");
        auto parts = parse_parts(arg_parts);
        Rational s = dedesum::fourier_dedekind(n, parts, arg_mod);
        out.emit(s.str(), {{"op", "fourier"},
                           {"n", n.get_str()},
                           {"parts", parts},
                           {"mod", arg_mod},
                           {"result", s.str()}});
    } else if (*zag) {
        std::vector<std::int64_t> vals;
        for (const auto& s : zargs) vals.push_back(parse_i64(s, "zagier"));
        std::int64_t a0 = vals.front();
        std::vector<std::int64_t> rest(vals.begin() + 1, vals.end());
        Rational s = dedesum::zagier_sum(a0, rest);
        out.emit(s.str(), {{"op", "zagier"},
                           {"a0", a0},
                           {"parts", rest},
                           {"result", s.str()}});
    } else if (*par) {
        dedesum::PartsTuple parts(parse_parts(arg_parts));
        std::int64_t n = parse_i64(arg_n, "n");
        Integer count;
        if (method == "dp") {
            count = interior ? dedesum::interior_count(parts, n)
                             : dedesum::partition_count(parts, n);
        } else {
            Rational f = interior ? dedesum::interior_formula(parts, n)
                                  : dedesum::partition_formula(parts, n);
            count = f.num();
        }
        out.emit(count.get_str(), {{"op", interior ? "interior" : "partition"},
                                   {"parts", parts.values()},
                                   {"n", n},
                                   {"method", method},
                                   {"result", count.get_str()}});
    } else if (*qps) {
        dedesum::PartsTuple parts(parse_parts(arg_parts));
        auto qp = dedesum::emit_quasipolynomial(parts);
        std::ostringstream plain;
        json jpoly = json::array(), jtables = json::array();
        plain << "poly";
        for (const auto& c : qp.poly) {
            plain << " " << c.str();
            jpoly.push_back(c.str());
        }
        for (std::size_t j = 0; j < qp.tables.size(); ++j) {
            plain << "\nperiod " << parts[j] << ":";
            json values = json::array();
            for (const auto& v : qp.tables[j]) {
                plain << " " << v.str();
                values.push_back(v.str());
            }
            jtables.push_back({{"modulus", parts[j]}, {"values", values}});
        }
        out.emit(plain.str(), {{"op", "quasipoly"},
                               {"parts", parts.values()},
                               {"poly", jpoly},
                               {"tables", jtables}});
    } else if (*qcmd) {
        dedesum::PartsTuple parts(parse_parts(arg_parts));
        Integer n = parse_integer(arg_n, "n");
        Rational q = dedesum::q_value(parts, n);
        out.emit(q.str(), {{"op", "q"},
                           {"parts", parts.values()},
                           {"n", n.get_str()},
                           {"result", q.str()}});
    } else if (*ver) {
        auto results = dedesum::verify::run_suites(suite, vopts);
        bool all_pass = true;
        std::ostringstream plain;
        json jsuites = json::array();
        for (const auto& r : results) {
            all_pass = all_pass && r.pass();
            plain << "suite=" << r.suite << " seed=" << r.seed
                  << " checked=" << r.checked << " failures=" << r.failures.size()
                  << " status=" << (r.pass() ? "pass" : "FAIL") << "\n";
            for (const auto& f : r.failures) plain << "  FAIL " << f << "\n";
            jsuites.push_back({{"suite", r.suite},
                               {"seed", r.seed},
                               {"checked", r.checked},
                               {"failures", r.failures},
                               {"pass", r.pass()}});
        }
        std::string text = plain.str();
        if (!text.empty() && text.back() == '\n') text.pop_back();
        out.emit(text, {{"op", "verify"}, {"suites", jsuites}, {"pass", all_pass}});
        return all_pass ? 0 : 1;
    } else if (*cone) {
        dedesum::cone2d::Cone2 c(parse_vec(gens[0]), parse_vec(gens[1]));
        auto terms = dedesum::cone2d::decompose(c);
        std::ostringstream plain;
        json jterms = json::array();
        for (const auto& t : terms) {
            plain << term_line(t) << "\n";
            jterms.push_back(term_json(t));
        }
        bool checked = false, ok = true;
        if (truncate >= 0) {
            checked = true;
            ok = dedesum::cone2d::series_verify(terms, c, truncate);
            plain << "series check (N=" << truncate << "): " << (ok ? "ok" : "FAIL")
                  << "\n";
        }
        std::string text = plain.str();
        if (!text.empty() && text.back() == '\n') text.pop_back();
        json payload{{"op", "cone2d"},
                     {"index", dedesum::cone2d::cone_index(c).get_str()},
                     {"terms", jterms}};
        if (checked) payload["series_ok"] = ok;
        out.emit(text, payload);
        return ok ? 0 : 1;
    } else if (*ben) {
        if (bench_what != "dedekind")
            throw dedesum::ValidationError("bench: only 'dedekind' is available");
        std::mt19937_64 rng(bench_seed);
        const int pairs = 10;
        using clock = std::chrono::steady_clock;
        double fast_total = 0, fast_max = 0, naive_total = 0;
        for (int i = 0; i < pairs; ++i) {
            Integer a = dedesum::verify::random_bits(rng, bench_bits);
            Integer b = dedesum::verify::random_bits(rng, bench_bits);
            while (dedesum::gcd(a, b) != 1) a += 1;
            auto t0 = clock::now();
            Rational fast = dedesum::dedekind_fast(a, b);
            auto t1 = clock::now();
            double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            fast_total += ms;
            fast_max = std::max(fast_max, ms);
            if (bench_bits <= 24) {
                auto t2 = clock::now();
                Rational slow = dedesum::dedekind_naive(a, b);
                auto t3 = clock::now();
                naive_total +=
                    std::chrono::duration<double, std::milli>(t3 - t2).count();
                if (slow != fast)
                    throw dedesum::InternalInconsistencyError(
                        "bench: fast and naive disagree");
            }
        }
        std::ostringstream plain;
        plain << "bits=" << bench_bits << " pairs=" << pairs
              << " fast_avg_ms=" << fast_total / pairs << " fast_max_ms=" << fast_max;
        json payload{{"op", "bench"},
                     {"bits", bench_bits},
                     {"pairs", pairs},
                     {"fast_avg_ms", fast_total / pairs},
                     {"fast_max_ms", fast_max}};
        if (bench_bits <= 24) {
            plain << " naive_avg_ms=" << naive_total / pairs;
            payload["naive_avg_ms"] = naive_total / pairs;
        }
        out.emit(plain.str(), payload);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const dedesum::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const dedesum::SingularityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const dedesum::InternalInconsistencyError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
