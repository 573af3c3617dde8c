// Command-line front end: construction, analysis, verification, scanning,
// and self-dual extraction with stable JSON/CSV formats.
//
// Exit codes: 0 success / all checks pass, 1 a verification check failed,
// 2 usage or unreadable input, 3 violated precondition, 4 resource cap.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "plateau/construct.hpp"
#include "plateau/verify.hpp"

using namespace plateau;
using nlohmann::json;

namespace {

constexpr std::uint64_t kDefaultWorkCap = 100'000'000ULL;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t work_cap() {
    if (const char* env = std::getenv("PLATEAU_MAX_ENUM")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw UsageError("PLATEAU_MAX_ENUM must be a positive integer");
    }
    return kDefaultWorkCap;
}

// The full pipeline enumerates p^{m+2} codewords of length about p^m, so the
// number of codeword cells p^{2m+2} is the budget that matters.
void check_desk_cap(int p, int m) {
    if (p == 2) {
        if (m > 12) throw CapError("p = 2 requires m <= 12");
        return;
    }
    const std::uint64_t cap = work_cap();
    long double cells = 1.0L;
    for (int i = 0; i < 2 * m + 2; ++i) cells *= p;
    if (cells > static_cast<long double>(cap))
        throw CapError("p^(2m+2) codeword cells exceed the work cap of " + std::to_string(cap));
}

std::shared_ptr<const FieldCtx> make_field(int p, int m, const std::string& poly_csv,
                                           const std::string& alpha_spec);

Elem parse_elem(const FieldCtx& F, const std::string& spec) {
    if (spec == "0") return 0;
    if (spec.size() >= 2 && spec[0] == 'a') {
        char* end = nullptr;
        unsigned long k = std::strtoul(spec.c_str() + 1, &end, 10);
        if (end && *end == '\0') return F.alpha_pow(k);
    }
    throw UsageError("element must be 0 or aK (meaning alpha^K), got '" + spec + "'");
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    return parts;
}

std::shared_ptr<const FieldCtx> make_field(int p, int m, const std::string& poly_csv,
                                           const std::string& alpha_spec) {
    std::optional<std::vector<int>> poly;
    if (!poly_csv.empty()) {
        std::vector<int> cs;
        for (const auto& t : split_csv(poly_csv)) cs.push_back(std::stoi(t));
        poly = std::move(cs);
    }
    auto ctx = FieldCtx::make(p, m, poly ? &*poly : nullptr);
    if (!alpha_spec.empty()) {
        Elem a = parse_elem(*ctx, alpha_spec);
        std::vector<int> acoeffs = ctx->coeffs(a);
        ctx = FieldCtx::make(p, m, &ctx->poly(), &acoeffs);
    }
    return ctx;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw UsageError("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path);
    out << content;
}

// Either a quadratic spec (coeffs) or a plain table file.
struct FunctionInput {
    PFunction f;
    std::optional<QuadraticSpec> spec;
    std::string desc;
};

FunctionInput load_function(int p, int m, const std::string& coeffs_csv,
                            const std::string& table_path, const std::string& poly_csv,
                            const std::string& alpha_spec) {
    if (!coeffs_csv.empty() && !table_path.empty())
        throw UsageError("give either --coeffs or --table, not both");
    if (!coeffs_csv.empty()) {
        auto ctx = make_field(p, m, poly_csv, alpha_spec);
        std::vector<Elem> coeffs;
        for (const auto& t : split_csv(coeffs_csv)) coeffs.push_back(parse_elem(*ctx, t));
        QuadraticSpec spec(ctx, std::move(coeffs));
        PFunction f = quad_table(spec);
        std::string desc = spec.describe();
        return {std::move(f), std::move(spec), std::move(desc)};
    }
    if (!table_path.empty()) {
        PFunction f = PFunction::from_json(read_json_file(table_path));
        return {std::move(f), std::nullopt, "table:" + table_path};
    }
    throw UsageError("one of --coeffs or --table is required");
}

json provenance(const FunctionInput& in, const WalshProfile& prof, const std::string& which) {
    json prov{{"p", prof.field->p()}, {"m", prof.field->m()}, {"which", which},
              {"function", in.desc}};
    if (prof.plateau_level) prov["s"] = *prof.plateau_level;
    if (prof.sign) prov["sign"] = *prof.sign;
    if (prof.plateau_level) prov["balanced"] = prof.balanced;
    if (in.spec) prov["coeffs"] = in.spec->to_json().at("coeffs");
    return prov;
}

int emit_reports(const std::vector<VerifyReport>& reports, const std::string& format) {
    bool any_fail = false;
    for (const auto& r : reports) {
        if (format == "json")
            std::cout << r.to_json().dump() << "\n";
        else
            std::cout << r.pretty();
        if (r.verdict == Verdict::Fail) any_fail = true;
    }
    return any_fail ? 1 : 0;
}

int cmd_field_info(int p, int m, const std::string& poly_csv, const std::string& alpha_spec) {
    auto ctx = make_field(p, m, poly_csv, alpha_spec);
    json j = ctx->to_json();
    j["q"] = ctx->q();
    j["primitive_element_count"] = ctx->primitive_elements().size();
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_construct(const FunctionInput& in, const std::string& which, const std::string& out) {
    WalshProfile prof = analyze(in.f);
    std::optional<LinearCode> code;
    if (which == "cbar") code = build_cbar(in.f);
    else if (which == "cstar") code = build_cstar(in.f);
    else if (which == "cf") code = build_cf(in.f);
    else if (which == "extended") code = build_extended(in.f);
    else throw UsageError("--which must be cbar, cstar, cf, or extended");
    json j = code->to_json();
    j["provenance"] = provenance(in, prof, which);
    write_output(out, j.dump(2) + "\n");
    return 0;
}

int cmd_analyze(const std::string& path) {
    LinearCode code = LinearCode::from_json(read_json_file(path));
    WeightDistribution dist = enumerate_weights(code, work_cap());
    GramInfo gi = gram_rank(code);
    OrthVerdict div = divisibility_selforth(dist, code.p(), code.contains_all_one());

    std::cout << dist.to_csv();
    std::cout << "n=" << code.n() << " k=" << code.k() << " p=" << code.p() << "\n";
    const int d = dist.min_distance();
    std::cout << "d=" << d << "\n";
    std::cout << "gram_rank=" << gi.rank << " hull_dim=" << gi.hull_dim << "\n";
    std::cout << "self_orthogonal=" << (gi.self_orthogonal ? "true" : "false")
              << " divisibility=" << to_string(div) << "\n";
    std::cout << "lcd=" << (gi.lcd ? "true" : "false") << "\n";
    if (d > 0)
        std::cout << "sphere_packing="
                  << to_string(sphere_packing_classify(code.n(), code.k(), d, code.p())) << "\n";
    if (code.k() < code.n()) {
        WeightDistribution dual = macwilliams(dist, code.k(), code.p());
        int dd = dual.min_distance();
        std::cout << "dual=[" << code.n() << "," << (code.n() - code.k()) << "," << dd << "]";
        if (dd > 0)
            std::cout << " dual_sphere_packing="
                      << to_string(sphere_packing_classify(code.n(), code.n() - code.k(), dd,
                                                           code.p()));
        std::cout << "\n";
    }
    return 0;
}

int cmd_verify(const FunctionInput& in, const std::string& targets_csv,
               const std::string& format, std::uint64_t seed) {
    std::vector<std::string> targets = split_csv(targets_csv);
    auto wants = [&](const std::string& t) {
        if (targets.empty()) return true;
        for (const auto& x : targets)
            if (x == t || x == "all") return true;
        return false;
    };

    WalshProfile prof = analyze(in.f);
    std::vector<VerifyReport> reports;
    if (wants("quadratic") && in.spec)
        reports.push_back(verify_quadratic(*in.spec, prof));
    if (wants("walsh")) reports.push_back(verify_walsh_counts(prof));
    if (wants("counts")) reports.push_back(verify_counts(in.f, prof, seed, 100));

    if (wants("table") || wants("dual") || wants("extended") || wants("lcd") ||
        wants("selforth")) {
        ConstructionBundle bundle = build_bundle(in.f);  // DegenerateRowsError -> exit 3
        WeightDistribution dist = enumerate_weights(bundle.cbar);
        if (wants("table")) reports.push_back(verify_table(prof, dist));
        if (wants("dual")) reports.push_back(verify_dual(prof, dist));
        if (wants("selforth")) reports.push_back(verify_selforth(prof, bundle));
        if (wants("extended")) reports.push_back(verify_extended(prof, bundle));
        if (wants("lcd")) reports.push_back(verify_lcd(bundle));
    }
    for (auto& r : reports)
        if (r.function_desc.empty()) r.function_desc = in.desc;
    return emit_reports(reports, format);
}

int cmd_scan(int p, int m, const std::string& poly_csv, std::optional<int> level_filter,
             std::uint64_t count, bool exhaustive, std::uint64_t seed, int workers,
             const std::string& format) {
    auto ctx = make_field(p, m, poly_csv, "");
    const int ncoeffs = QuadraticSpec::expected_len(m);

    std::vector<std::vector<Elem>> specs;
    if (exhaustive) {
        long double total = 1.0L;
        for (int i = 0; i < ncoeffs; ++i) total *= ctx->q();
        if (total > 4'000'000.0L) throw CapError("exhaustive coefficient space too large");
        std::vector<Elem> cur(ncoeffs, 0);
        for (;;) {
            specs.push_back(cur);
            int pos = 0;
            while (pos < ncoeffs && ++cur[pos] == ctx->q()) cur[pos++] = 0;
            if (pos == ncoeffs) break;
        }
    } else {
        DetRng rng(seed);
        specs.reserve(count);
        for (std::uint64_t i = 0; i < count; ++i) {
            std::vector<Elem> cs(ncoeffs);
            for (int j = 0; j < ncoeffs; ++j) cs[j] = static_cast<Elem>(rng.next(ctx->q()));
            specs.push_back(std::move(cs));
        }
    }

    struct Slot {
        std::vector<std::string> lines;
        int fails = 0;
        bool degenerate = false;
        bool filtered = false;
    };
    std::vector<Slot> slots(specs.size());
    std::atomic<std::size_t> cursor{0};

    auto worker = [&]() {
        for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= specs.size()) return;
            QuadraticSpec spec(ctx, specs[i]);
            if (level_filter && kernel_dim(spec) != *level_filter) {
                slots[i].filtered = true;
                continue;
            }
            SpecRun run = run_all_checks(spec);
            slots[i].degenerate = run.degenerate;
            if (run.degenerate) {
                if (format == "json")
                    slots[i].lines.push_back(
                        json{{"spec", run.spec_desc}, {"degenerate", true}}.dump());
                else
                    slots[i].lines.push_back("degenerate  f=[" + run.spec_desc + "]\n");
                continue;
            }
            for (const auto& r : run.reports) {
                if (r.verdict == Verdict::Fail) ++slots[i].fails;
                if (format == "json") {
                    json j = r.to_json();
                    j["spec"] = run.spec_desc;
                    slots[i].lines.push_back(j.dump());
                } else {
                    slots[i].lines.push_back(r.pretty());
                }
            }
        }
    };
    if (workers < 1) workers = 1;
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    long fails = 0, degenerate = 0, filtered = 0, reported = 0;
    for (const auto& s : slots) {
        for (const auto& line : s.lines) {
            std::cout << line;
            if (format == "json") std::cout << "\n";
        }
        fails += s.fails;
        degenerate += s.degenerate;
        filtered += s.filtered;
        reported += !s.filtered && !s.degenerate;
    }
    std::ostream& sum = (format == "json") ? std::cerr : std::cout;
    sum << "scanned=" << specs.size() << " verified=" << reported
        << " degenerate=" << degenerate << " filtered=" << filtered
        << " failed_checks=" << fails << "\n";
    return fails > 0 ? 1 : 0;
}

int cmd_selfdual(const std::string& path, const std::string& out) {
    LinearCode code = LinearCode::from_json(read_json_file(path));
    SelfDualResult res = extend_to_self_dual(code);  // NotSelfOrthogonalError -> exit 3
    if (!res.code) {
        json j{{"self_dual", false}, {"condition", res.violated}};
        write_output(out, j.dump(2) + "\n");
        return 0;
    }
    json j = res.code->to_json();
    j["self_dual"] = true;
    j["contains_input"] = true;
    write_output(out, j.dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact linear-code construction and verification from plateaued functions"};
    app.require_subcommand(1);

    int p = 3, m = 2;
    std::string poly_csv, alpha_spec, coeffs_csv, table_path, which = "cbar";
    std::string in_path, out_path, targets = "all", format = "pretty";
    std::uint64_t seed = 1, count = 20;
    bool exhaustive = false;
    int workers = 1;
    std::optional<int> level_filter;

    auto add_field_opts = [&](CLI::App* cmd, bool with_alpha) {
        cmd->add_option("--p", p, "field characteristic (prime)")->required();
        cmd->add_option("--m", m, "extension degree")->required();
        cmd->add_option("--poly", poly_csv, "modulus coefficients, constant first");
        if (with_alpha)
            cmd->add_option("--alpha", alpha_spec, "primitive element as aK (a power of the default)");
    };
    auto add_function_opts = [&](CLI::App* cmd) {
        cmd->add_option("--coeffs", coeffs_csv, "quadratic coefficients a_0..: aK or 0");
        cmd->add_option("--table", table_path, "function table JSON file");
    };

    auto* fi = app.add_subcommand("field-info", "print the field context");
    add_field_opts(fi, true);

    auto* co = app.add_subcommand("construct", "build a code and print its JSON");
    add_field_opts(co, true);
    add_function_opts(co);
    co->add_option("--which", which, "cbar | cstar | cf | extended");
    co->add_option("--out", out_path, "output file (default stdout)");

    auto* an = app.add_subcommand("analyze", "weights and verdicts for a code file");
    an->add_option("--in", in_path, "code JSON file")->required();

    auto* ve = app.add_subcommand("verify", "run closed-form checks for one function");
    add_field_opts(ve, true);
    add_function_opts(ve);
    ve->add_option("--targets", targets,
                   "comma list: quadratic,walsh,counts,table,dual,selforth,extended,lcd,all");
    ve->add_option("--format", format, "pretty | json");
    ve->add_option("--seed", seed, "seed for randomized checks");

    auto* sc = app.add_subcommand("scan", "classify and verify many quadratic specs");
    add_field_opts(sc, false);
    sc->add_option("--level", level_filter, "only specs with this plateau level");
    sc->add_option("--count", count, "number of sampled specs");
    sc->add_flag("--exhaustive", exhaustive, "sweep the whole coefficient space");
    sc->add_option("--seed", seed, "sampling seed");
    sc->add_option("--workers", workers, "worker threads");
    sc->add_option("--format", format, "pretty | json");

    auto* sd = app.add_subcommand("selfdual", "extend a self-orthogonal code file to self-dual");
    sd->add_option("--in", in_path, "code JSON file")->required();
    sd->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (fi->parsed()) return cmd_field_info(p, m, poly_csv, alpha_spec);
        if (an->parsed()) return cmd_analyze(in_path);
        if (sd->parsed()) return cmd_selfdual(in_path, out_path);
        if (co->parsed()) {
            FunctionInput in = load_function(p, m, coeffs_csv, table_path, poly_csv, alpha_spec);
            return cmd_construct(in, which, out_path);
        }
        if (ve->parsed()) {
            check_desk_cap(p, m);
            FunctionInput in = load_function(p, m, coeffs_csv, table_path, poly_csv, alpha_spec);
            return cmd_verify(in, targets, format, seed);
        }
        if (sc->parsed()) {
            check_desk_cap(p, m);
            return cmd_scan(p, m, poly_csv, level_filter, count, exhaustive, seed, workers,
                            format);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const TooLargeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
