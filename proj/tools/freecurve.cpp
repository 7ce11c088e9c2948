// freecurve: enumerate the combinatorial objects, generate curve corpora,
// and verify certificates. Output is JSON lines with a trailing summary
// object; exit 0 on success, 1 on a verification failure, 2 on usage or
// parse errors.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "freecurve/serialize.hpp"

using namespace freecurve;

namespace {

struct Output {
    std::ofstream file;
    std::ostream& stream() { return file.is_open() ? file : std::cout; }

    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw std::runtime_error("cannot open output file: " + path);
    }

    void line(const Json& j) { stream() << j.dump() << "\n"; }
};

int worker_count() {
    const char* env = std::getenv("FREECURVE_WORKERS");
    if (env) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<int>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

// Applies fn to every index and returns results in input order, fanning out
// over at most worker_count() threads. Output bytes never depend on the
// schedule.
template <typename Fn>
std::vector<std::string> parallel_map(std::size_t count, Fn fn) {
    std::vector<std::string> out(count);
    int workers = std::min<int>(worker_count(), static_cast<int>(count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) out[i] = fn(i);
        });
    for (auto& t : pool) t.join();
    return out;
}

long long elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
}

int cmd_enumerate(int n, const std::string& what, Output& out) {
    auto start = std::chrono::steady_clock::now();
    if (n < 3 || (what == "hred" && n < 4)) throw CLI::ValidationError("--n too small for " + what);
    long long count = 0, formula = 0, brute = 0;
    if (what == "segments") {
        auto segs = enumerate_maximal_segments(n);
        for (const auto& s : segs) out.line(segment_json(s));
        count = formula = brute = static_cast<long long>(segs.size());
    } else if (what == "hred") {
        auto segs = hred_filter(enumerate_maximal_segments(n), n);
        for (const auto& s : segs) out.line(segment_json(s));
        count = static_cast<long long>(segs.size());
        formula = count_hred(n).total;
        brute = oracle::count_hred_bruteforce(n);
    } else if (what == "components") {
        auto comps = enumerate_components(n);
        for (const auto& c : comps) out.line(component_json(c));
        count = static_cast<long long>(comps.size());
        formula = count_components(n);
        brute = oracle::count_components_bruteforce(n);
    } else {
        throw CLI::ValidationError("--what must be segments, components or hred");
    }
    bool ok = count == formula && formula == brute;
    out.line(Json{{"command", "enumerate"},
                  {"n", n},
                  {"what", what},
                  {"count", count},
                  {"formula", formula},
                  {"bruteforce", brute},
                  {"ok", ok},
                  {"timing", Json{{"total_ms", elapsed_ms(start)}}}});
    return ok ? 0 : 1;
}

int cmd_count(int n, int n_max, Output& out) {
    auto start = std::chrono::steady_clock::now();
    if (n < 4) throw CLI::ValidationError("count requires --n >= 4");
    if (n_max < n) n_max = n;
    bool ok = true;
    for (int m = n; m <= n_max; ++m) {
        Json row{{"n", m},
                 {"hred", count_hred(m).total},
                 {"hred_per_line", count_hred(m).per_l},
                 {"components", count_components(m)}};
        if (m <= 12) {  // brute force stays cheap at desk scale
            row["hred_bruteforce"] = oracle::count_hred_bruteforce(m);
            row["components_bruteforce"] = oracle::count_components_bruteforce(m);
            if (row["hred"] != row["hred_bruteforce"] ||
                row["components"] != row["components_bruteforce"])
                ok = false;
        }
        out.line(row);
    }
    out.line(Json{{"command", "count"},
                  {"n", n},
                  {"n_max", n_max},
                  {"ok", ok},
                  {"timing", Json{{"total_ms", elapsed_ms(start)}}}});
    return ok ? 0 : 1;
}

CurveCertificate generate_table1(int n, int case_id, int i, Rng rng) {
    FactorSpec spec;
    spec.case_id = case_id;
    spec.i = i;
    for (int d = 1; d <= n; ++d) {
        spec.factors.clear();
        // slopes land in disjoint ranges per t, so the factors are always
        // pairwise non-proportional and the curve squarefree
        for (int t = 0; t < d; ++t)
            spec.factors.emplace_back(Rat(1), rat(21 * (t + 1)) + rng.positive_rational());
        try {
            return table1_curve(spec, n);
        } catch (const std::invalid_argument&) {
            continue;
        }
    }
    throw std::logic_error("no admissible factor count");
}

int cmd_generate(int n, const std::string& family, std::uint64_t seed, Output& out) {
    auto start = std::chrono::steady_clock::now();
    if (n < 4) throw CLI::ValidationError("generate requires --n >= 4");
    if (family != "table1" && family != "ploski" && family != "all")
        throw CLI::ValidationError("--family must be table1, ploski or all");
    Rng rng(seed);
    std::vector<std::function<CurveCertificate()>> jobs;
    if (family == "table1" || family == "all") {
        for (const auto& [case_id, i] : table1_admissible(n)) {
            Rng sub = rng.split(static_cast<std::uint64_t>(100 * case_id + i));
            jobs.push_back([n, c = case_id, i = i, sub] { return generate_table1(n, c, i, sub); });
        }
    }
    if (family == "ploski" || family == "all") {
        Rng sub = rng.split(7000);
        std::vector<Rat> lambdas;
        for (int l = 0; l < n / 2; ++l) lambdas.push_back(sub.positive_rational());
        jobs.push_back([n, lambdas] { return ploski_curve(n, lambdas); });
    }
    auto lines = parallel_map(jobs.size(), [&](std::size_t idx) {
        return certificate_json(jobs[idx]()).dump();
    });
    for (const auto& l : lines) out.stream() << l << "\n";
    out.line(Json{{"command", "generate"},
                  {"n", n},
                  {"family", family},
                  {"seed", seed},
                  {"items", jobs.size()},
                  {"timing", Json{{"total_ms", elapsed_ms(start)}}}});
    return 0;
}

// One named check on one certificate; returns an empty string on success and
// a short reason otherwise.
std::string run_check(const std::string& name, const CurveCertificate& cert) {
    const HomPoly& g = cert.g;
    if (name == "syzygy") {
        HomPoly r = cert.matrix.linear[0] * g.partial(Var::X) +
                    cert.matrix.linear[1] * g.partial(Var::Y) +
                    cert.matrix.linear[2] * g.partial(Var::Z);
        return r.is_zero() ? "" : "linear column is not a syzygy of g";
    }
    if (name == "curl") {
        for (const auto& k : curl(minors(cert.matrix)))
            if (!k.is_zero()) return "curl of the minors is nonzero";
        return "";
    }
    if (name == "route") {
        return g_from_matrix(cert.matrix) == g ? "" : "matrix determinant does not reproduce g";
    }
    if (name == "squarefree") {
        return squarefree_test(g) ? "" : "g has a repeated factor";
    }
    if (name == "support") {
        if (!cert.segment) return "";
        for (const auto& [e, c] : g.terms())
            if (!cert.segment->contains(e)) return "support leaves the declared segment";
        return "";
    }
    if (name == "freeness") {
        FreenessVerdict v = freeness_profile(g, cert.n + 1);
        return v.is_free ? "" : "syzygy dimensions do not match the free prediction";
    }
    if (name == "tjurina") {
        long long target = static_cast<long long>(cert.n) * cert.n - 3 * cert.n + 3;
        return tjurina_number(g) == target ? "" : "Tjurina number is not n^2 - 3n + 3";
    }
    throw CLI::ValidationError("unknown check: " + name);
}

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<Json> read_items(const std::string& path) {
    std::ifstream file;
    if (!path.empty() && path != "-") {
        file.open(path);
        if (!file) throw std::runtime_error("cannot open input file: " + path);
    }
    std::istream& in = file.is_open() ? file : std::cin;
    std::vector<Json> items;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Json j = Json::parse(line);  // throws on malformed input
        if (j.contains("command")) continue;  // trailing summary of a prior run
        items.push_back(std::move(j));
    }
    return items;
}

int cmd_verify(const std::string& input, const std::string& checks_csv, Output& out) {
    auto start = std::chrono::steady_clock::now();
    auto checks = split_list(checks_csv);
    if (checks.empty()) throw CLI::ValidationError("--checks must name at least one check");
    for (const auto& name : checks)
        if (name != "syzygy" && name != "curl" && name != "route" && name != "squarefree" &&
            name != "support" && name != "freeness" && name != "tjurina")
            throw CLI::ValidationError("unknown check: " + name);
    std::vector<CurveCertificate> certs;
    for (const auto& j : read_items(input)) certs.push_back(certificate_from_json(j));

    auto lines = parallel_map(certs.size(), [&](std::size_t idx) {
        Json verdicts;
        bool ok = true;
        std::string first_failure;
        for (const auto& name : checks) {
            std::string reason;
            try {
                reason = run_check(name, certs[idx]);
            } catch (const std::exception& e) {
                reason = e.what();
            }
            verdicts[name] = reason.empty();
            if (!reason.empty()) {
                ok = false;
                if (first_failure.empty()) first_failure = name + ": " + reason;
            }
        }
        Json item{{"item", idx}, {"n", certs[idx].n}, {"checks", verdicts}, {"ok", ok}};
        if (!ok) item["failure"] = first_failure;
        return item.dump();
    });
    std::size_t passed = 0;
    std::string first_failure;
    for (const auto& l : lines) {
        out.stream() << l << "\n";
        Json j = Json::parse(l);
        if (j.at("ok").get<bool>())
            ++passed;
        else if (first_failure.empty())
            first_failure = j.at("failure").get<std::string>();
    }
    Json summary{{"command", "verify"},
                 {"items", certs.size()},
                 {"passed", passed},
                 {"failed", certs.size() - passed},
                 {"timing", Json{{"total_ms", elapsed_ms(start)}}}};
    if (!first_failure.empty()) summary["first_failure"] = first_failure;
    out.line(summary);
    return passed == certs.size() ? 0 : 1;
}

int cmd_tjurina(const std::string& g_text, const std::string& input, Output& out) {
    auto start = std::chrono::steady_clock::now();
    std::vector<HomPoly> polys;
    if (!g_text.empty()) {
        polys.push_back(HomPoly::parse(g_text));
    } else {
        for (const auto& j : read_items(input)) polys.push_back(certificate_from_json(j).g);
    }
    for (std::size_t idx = 0; idx < polys.size(); ++idx) {
        const HomPoly& g = polys[idx];
        out.line(Json{{"item", idx},
                      {"n", g.degree()},
                      {"tjurina", tjurina_number(g)},
                      {"dim_syz1", syzygy_space(g, 1).size()}});
    }
    out.line(Json{{"command", "tjurina"},
                  {"items", polys.size()},
                  {"timing", Json{{"total_ms", elapsed_ms(start)}}}});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"free plane curves with a linear Jacobian syzygy"};
    app.require_subcommand(1);

    int n = 0, n_max = 0;
    std::string what = "segments", family = "all", checks = "syzygy,curl,route,squarefree";
    std::string out_path, in_path, g_text;
    std::uint64_t seed = 0;

    auto* enumerate = app.add_subcommand("enumerate", "list segments, components or the reduced family");
    enumerate->add_option("--n", n, "grid degree")->required();
    enumerate->add_option("--what", what, "segments | components | hred");
    enumerate->add_option("--out", out_path, "output path (default stdout)");

    auto* count = app.add_subcommand("count", "closed counts against brute force");
    count->add_option("--n", n, "first degree")->required();
    count->add_option("--n-max", n_max, "last degree (sweep)");
    count->add_option("--out", out_path, "output path");

    auto* generate = app.add_subcommand("generate", "emit curve certificates");
    generate->add_option("--n", n, "curve degree")->required();
    generate->add_option("--family", family, "table1 | ploski | all");
    generate->add_option("--seed", seed, "coefficient seed");
    generate->add_option("--out", out_path, "output path");

    auto* verify = app.add_subcommand("verify", "check a certificate stream");
    verify->add_option("--in", in_path, "certificate file (default stdin)");
    verify->add_option("--checks", checks,
                       "comma list: syzygy,curl,route,squarefree,support,freeness,tjurina");
    verify->add_option("--out", out_path, "output path");

    auto* tjurina = app.add_subcommand("tjurina", "Tjurina numbers of curves");
    tjurina->add_option("--g", g_text, "polynomial text");
    tjurina->add_option("--in", in_path, "certificate file (default stdin)");
    tjurina->add_option("--out", out_path, "output path");

    try {
        app.parse(argc, argv);
        Output out;
        out.open(out_path);
        if (enumerate->parsed()) return cmd_enumerate(n, what, out);
        if (count->parsed()) return cmd_count(n, n_max, out);
        if (generate->parsed()) return cmd_generate(n, family, seed, out);
        if (verify->parsed()) return cmd_verify(in_path, checks, out);
        if (tjurina->parsed()) return cmd_tjurina(g_text, in_path, out);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
