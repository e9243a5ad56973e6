#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "profgen/engine.hpp"
#include "profgen/oracle.hpp"
#include "profgen/reducer.hpp"
#include "profgen/similarity.hpp"
#include "profgen/spec_io.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace profgen;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string round3(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string approx(const BigInt& n) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", static_cast<double>(n));
    return buf;
}

std::string set_str(const SymptomSet& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& n : s) {
        if (!first) out += ", ";
        out += n;
        first = false;
    }
    return out + "}";
}

void print_diagnostics(const std::string& path, const ParseDiagnostics& d,
                       std::ostream& os) {
    for (const auto& e : d.entries) {
        os << path << ":" << e.line << ":" << e.col << ": "
           << (e.is_error ? "error" : "warning") << " [" << e.code << "] "
           << e.message << "\n";
    }
}

DisorderSpec load_disorder(const std::string& path, std::ostream& err) {
    std::string text = read_file(path);
    std::string stem = path;
    if (auto slash = stem.find_last_of('/'); slash != std::string::npos)
        stem = stem.substr(slash + 1);
    if (auto dot = stem.find_last_of('.'); dot != std::string::npos)
        stem = stem.substr(0, dot);
    ParseResult res = parse_auto(text, stem);
    if (!res.spec) {
        print_diagnostics(path, res.diagnostics, err);
        throw InvalidGenerator("failed to parse '" + path + "'");
    }
    return *res.spec;
}

// Output destination: --out PATH or stdout.
struct Sink {
    std::ofstream file;
    std::ostream* os = &std::cout;

    explicit Sink(const std::string& path) {
        if (path.empty()) return;
        file.open(path, std::ios::binary);
        if (!file) throw UsageError("cannot write '" + path + "'");
        os = &file;
    }
    std::ostream& out() { return *os; }
};

std::map<std::string, BigInt> parse_published(const std::vector<std::string>& kvs) {
    std::map<std::string, BigInt> out;
    for (const auto& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw UsageError("--published-count expects NAME=N, got '" + kv + "'");
        std::string digits;
        for (char c : kv.substr(eq + 1)) {
            if (c == ',' || c == '_') continue;
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw UsageError("--published-count value must be an integer");
            digits += c;
        }
        if (digits.empty())
            throw UsageError("--published-count value must be an integer");
        out[kv.substr(0, eq)] = BigInt(digits);
    }
    return out;
}

int cmd_validate(const std::vector<std::string>& paths) {
    bool any_error = false;
    for (const auto& path : paths) {
        std::string text = read_file(path);
        ParseResult res = parse_auto(text, path);
        print_diagnostics(path, res.diagnostics, std::cout);
        if (!res.spec) {
            any_error = true;
            std::cout << path << ": INVALID\n";
            continue;
        }
        const DisorderSpec& d = *res.spec;
        std::cout << path << ": ok — " << d.name << ", " << d.criteria.size()
                  << " criteria, " << d.domain_order.size() << " symptoms, "
                  << (d.disjoint_criteria ? "disjoint" : "overlapping")
                  << " criterion domains\n";
    }
    return any_error ? kExitDomain : kExitOk;
}

int cmd_count(const std::vector<std::string>& paths, std::size_t eval_cap) {
    for (const auto& path : paths) {
        DisorderSpec d = load_disorder(path, std::cerr);
        BigInt n = count_profiles(d, eval_cap);
        std::cout << d.name << ": " << n.str() << " (" << approx(n) << ")\n";
    }
    return kExitOk;
}

int cmd_export(const std::vector<std::string>& paths, const std::string& out_path,
               bool mp, EnumerateOptions eopt) {
    std::vector<DisorderSpec> specs;
    for (const auto& path : paths) specs.push_back(load_disorder(path, std::cerr));
    std::vector<const DisorderSpec*> ptrs;
    for (const auto& d : specs) ptrs.push_back(&d);
    auto table = SymbolTable::intern(ptrs);

    Sink sink(out_path);
    std::ostream& os = sink.out();

    // Header: a leading disorder-name column when several disorders share
    // the file, otherwise just the symptom columns.
    bool multi = specs.size() > 1;
    if (multi) os << "disorder";
    for (std::size_t i = 0; i < table->size(); ++i) {
        if (multi || i) os << ",";
        os << table->name(static_cast<std::uint32_t>(i));
    }
    os << "\n";

    for (const auto& d : specs) {
        if (mp) {
            Profile p = max_profile(d, *table);
            if (multi) os << d.name;
            for (std::uint32_t i = 0; i < p.bits(); ++i) {
                if (multi || i) os << ",";
                os << (p.test(i) ? '1' : '0');
            }
            os << "\n";
            continue;
        }
        ProfileStream stream(d, table, eopt);
        Profile p;
        while (stream.next(p)) {
            if (multi) os << d.name;
            for (std::uint32_t i = 0; i < p.bits(); ++i) {
                if (multi || i) os << ",";
                os << (p.test(i) ? '1' : '0');
            }
            os << "\n";
        }
    }
    return kExitOk;
}

std::optional<BigInt> count_or_published(
    const DisorderSpec& d, const std::map<std::string, BigInt>& published,
    std::size_t eval_cap) {
    if (auto it = published.find(d.name); it != published.end()) return it->second;
    try {
        return count_profiles(d, eval_cap);
    } catch (const Error&) {
        return std::nullopt;
    }
}

json mpcs_to_json(const MpcsResult& r, const SymbolTable& table) {
    json j;
    j["value"] = r.value;
    j["value_3dp"] = round3(r.value);
    j["agg"] = to_string(r.agg);
    j["phi_ab"] = r.phi_ab;
    j["phi_ba"] = r.phi_ba;
    j["comparisons"] = r.comparisons.str();
    j["empty_profile_seen"] = r.empty_profile_seen;
    if (r.witness) {
        j["witness_a"] = set_str(r.witness->first.to_set(table));
        j["witness_b"] = set_str(r.witness->second.to_set(table));
        j["witness_a_index"] = r.witness_a_index;
        j["witness_b_index"] = r.witness_b_index;
    }
    return j;
}

void print_mpcs_text(const MpcsResult& r, const SymbolTable& table,
                     std::ostream& os) {
    os << "value: " << full(r.value) << "\n";
    os << "value_3dp: " << round3(r.value) << "\n";
    os << "agg: " << to_string(r.agg) << "\n";
    if (r.agg == Aggregation::Mean) {
        os << "phi_ab: " << full(r.phi_ab) << "\n";
        os << "phi_ba: " << full(r.phi_ba) << "\n";
    }
    os << "comparisons: " << r.comparisons.str() << "\n";
    if (r.witness) {
        os << "witness_a: " << set_str(r.witness->first.to_set(table)) << "\n";
        os << "witness_b: " << set_str(r.witness->second.to_set(table)) << "\n";
    }
    if (r.empty_profile_seen)
        os << "note: an empty profile was compared (cosine taken as 0)\n";
}

void print_segmentation(const Segmentation& s, std::ostream& os) {
    os << "shared: " << set_str(s.shared) << "\n";
    os << "minimize_a: " << set_str(s.minimize_a) << "\n";
    os << "minimize_b: " << set_str(s.minimize_b) << "\n";
    os << "untouched: " << set_str(s.untouched) << "\n";
    os << "necessary_a: " << set_str(s.necessary_a) << "\n";
    os << "necessary_b: " << set_str(s.necessary_b) << "\n";
    os << "forced_a: " << set_str(s.forced_a) << "\n";
    os << "forced_b: " << set_str(s.forced_b) << "\n";
}

json segmentation_to_json(const Segmentation& s) {
    json j;
    j["shared"] = set_str(s.shared);
    j["minimize_a"] = set_str(s.minimize_a);
    j["minimize_b"] = set_str(s.minimize_b);
    j["untouched"] = set_str(s.untouched);
    j["necessary_a"] = set_str(s.necessary_a);
    j["necessary_b"] = set_str(s.necessary_b);
    j["forced_a"] = set_str(s.forced_a);
    j["forced_b"] = set_str(s.forced_b);
    return j;
}

struct MpcsConfig {
    std::string agg = "max";
    std::string mode = "auto";
    bool mp = false;
    bool oracle = false;
    bool as_json = false;
    unsigned threads = 1;
    std::string out_path;
    std::vector<std::string> published_kv;
    std::size_t row_cap = kDefaultRowCap;
};

int cmd_mpcs(const std::string& path_a, const std::string& path_b,
             const MpcsConfig& cfg) {
    if (cfg.mode == "conditional" && cfg.agg == "mean")
        throw UsageError("--mode conditional requires --agg max");

    DisorderSpec a = load_disorder(path_a, std::cerr);
    DisorderSpec b = load_disorder(path_b, std::cerr);
    auto published = parse_published(cfg.published_kv);
    Aggregation agg = cfg.agg == "mean" ? Aggregation::Mean : Aggregation::Max;

    Sink sink(cfg.out_path);
    std::ostream& os = sink.out();

    auto table = SymbolTable::intern(a, b);

    if (cfg.mp) {
        Profile pa = max_profile(a, *table);
        Profile pb = max_profile(b, *table);
        double v = mpcs_mp(pa, pb);
        if (cfg.as_json) {
            json j;
            j["a"] = a.name;
            j["b"] = b.name;
            j["method"] = "mp";
            j["value"] = v;
            j["value_3dp"] = round3(v);
            os << j.dump(2) << "\n";
        } else {
            os << "a: " << a.name << "\nb: " << b.name << "\nmethod: mp\n";
            os << "value: " << full(v) << "\n";
            os << "value_3dp: " << round3(v) << "\n";
        }
        return kExitOk;
    }

    auto ca = count_or_published(a, published, kDefaultEvalCap);
    auto cb = count_or_published(b, published, kDefaultEvalCap);

    std::string mode = cfg.mode;
    if (mode == "auto") {
        bool big = (ca && *ca > 10000) || (cb && *cb > 10000);
        bool reducible = a.disjoint_criteria && b.disjoint_criteria;
        mode = (agg == Aggregation::Max && big && reducible) ? "conditional"
                                                             : "brute";
    }

    if (mode == "conditional") {
        ConditionalOptions copt;
        copt.published_counts = published;
        copt.threads = cfg.threads;
        ReductionReport rep = mpcs_max_conditional(a, b, copt);
        if (cfg.as_json) {
            json j;
            j["a"] = a.name;
            j["b"] = b.name;
            j["method"] = "conditional";
            j["mpcs"] = mpcs_to_json(rep.mpcs, *table);
            j["segmentation"] = segmentation_to_json(rep.segmentation);
            j["reduced_a"] = serialize(rep.reduced_a, SpecFormat::Dsl);
            j["reduced_b"] = serialize(rep.reduced_b, SpecFormat::Dsl);
            j["comparisons_before"] = rep.comparisons_before_known
                                          ? json(rep.comparisons_before.str())
                                          : json(nullptr);
            j["comparisons_after"] = rep.comparisons_after.str();
            os << j.dump(2) << "\n";
        } else {
            os << "a: " << a.name << "\nb: " << b.name
               << "\nmethod: conditional\n";
            print_mpcs_text(rep.mpcs, *table, os);
            if (rep.comparisons_before_known)
                os << "comparisons_before: " << rep.comparisons_before.str()
                   << "\n";
            os << "comparisons_after: " << rep.comparisons_after.str() << "\n";
        }
        return kExitOk;
    }

    // Brute force over the fully materialized matrices.
    EnumerateOptions eopt;
    eopt.row_cap = cfg.row_cap;
    ProfileMatrix ma = materialize(a, table, eopt);
    ProfileMatrix mb = materialize(b, table, eopt);
    SimilarityOptions sopt;
    sopt.threads = cfg.threads;
    MpcsResult r = mpcs(ma, mb, agg, sopt);

    if (cfg.oracle) {
        oracle::Agg oagg = agg == Aggregation::Mean ? oracle::Agg::Mean
                                                    : oracle::Agg::Max;
        oracle::NaiveMpcs naive = oracle::naive_mpcs(a, b, oagg);
        if (std::abs(naive.value - r.value) > 1e-9) {
            std::cerr << "oracle mismatch: fast=" << full(r.value)
                      << " naive=" << full(naive.value) << "\n";
            return kExitDomain;
        }
    }

    if (cfg.as_json) {
        json j;
        j["a"] = a.name;
        j["b"] = b.name;
        j["method"] = "brute";
        j["rows_a"] = ma.rows();
        j["rows_b"] = mb.rows();
        j["mpcs"] = mpcs_to_json(r, *table);
        if (cfg.oracle) j["oracle"] = "ok";
        os << j.dump(2) << "\n";
    } else {
        os << "a: " << a.name << "\nb: " << b.name << "\nmethod: brute\n";
        os << "rows_a: " << ma.rows() << "\nrows_b: " << mb.rows() << "\n";
        print_mpcs_text(r, *table, os);
        if (cfg.oracle) os << "oracle: ok\n";
    }
    return kExitOk;
}

int cmd_reduce(const std::string& path_a, const std::string& path_b,
               const std::string& out_path, bool as_json) {
    DisorderSpec a = load_disorder(path_a, std::cerr);
    DisorderSpec b = load_disorder(path_b, std::cerr);
    ReducedPair pair = conditional_pair(a, b);

    Sink sink(out_path);
    std::ostream& os = sink.out();
    if (as_json) {
        json j;
        j["a"] = a.name;
        j["b"] = b.name;
        j["segmentation"] = segmentation_to_json(pair.segmentation);
        j["reduced_a"] = serialize(pair.a, SpecFormat::Dsl);
        j["reduced_b"] = serialize(pair.b, SpecFormat::Dsl);
        os << j.dump(2) << "\n";
        return kExitOk;
    }
    os << "segmentation:\n";
    print_segmentation(pair.segmentation, os);
    os << "reduced_a:\n";
    for (const auto& c : pair.a.criteria) {
        os << "  " << to_dsl(c.gen);
        if (!c.label.empty()) os << "  # " << c.label;
        os << "\n";
    }
    os << "reduced_b:\n";
    for (const auto& c : pair.b.criteria) {
        os << "  " << to_dsl(c.gen);
        if (!c.label.empty()) os << "  # " << c.label;
        os << "\n";
    }
    return kExitOk;
}

int cmd_eval(const std::string& expr_or_path, const std::string& out_path,
             bool use_oracle) {
    std::string text;
    std::string where;
    std::string trimmed = expr_or_path;
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
        trimmed.erase(trimmed.begin());
    if (!trimmed.empty() && trimmed.front() == '[') {
        text = expr_or_path;
        where = "<inline>";
    } else {
        text = read_file(expr_or_path);
        where = expr_or_path;
    }

    ParseResult res = parse_dsl_generator(text);
    if (!res.spec) {
        print_diagnostics(where, res.diagnostics, std::cerr);
        return kExitDomain;
    }
    const Generator& g = res.spec->criteria.front().gen;
    Family fam = eval_generator(g);

    if (use_oracle) {
        oracle::NFamily naive = oracle::naive_eval(g);
        oracle::NFamily got;
        for (const auto& p : fam) got.insert(oracle::NSet(p.begin(), p.end()));
        if (got != naive) {
            std::cerr << "oracle mismatch: fast yields " << fam.size()
                      << " combinations, naive yields " << naive.size() << "\n";
            return kExitDomain;
        }
    }

    Sink sink(out_path);
    std::ostream& os = sink.out();
    os << "generator: " << to_dsl(g) << "\n";
    for (const auto& p : fam) os << set_str(p) << "\n";
    os << "count: " << fam.size() << "\n";
    if (use_oracle) os << "oracle: ok\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact symptom-profile enumeration and MPCS similarity for "
        "criteria-based disorder specifications"};
    app.require_subcommand(1);

    std::vector<std::string> paths;
    std::string path_a, path_b, out_path, expr;
    std::string agg = "max", mode = "auto";
    bool mp = false, use_oracle = false, as_json = false;
    unsigned threads = 1;
    std::size_t row_cap = kDefaultRowCap;
    std::vector<std::string> published_kv;

    auto* validate = app.add_subcommand("validate", "Parse and validate spec files");
    validate->add_option("files", paths, "Disorder spec files")->required();

    auto* count = app.add_subcommand("count", "Exact profile counts");
    count->add_option("files", paths, "Disorder spec files")->required();

    auto* exp = app.add_subcommand("export", "Write the profile matrix as CSV");
    exp->add_option("files", paths, "Disorder spec files")->required();
    exp->add_flag("--mp", mp, "Write the single maximum-profile row instead");
    exp->add_option("--out", out_path, "Output path (default stdout)");
    exp->add_option("--row-cap", row_cap, "Row cap for overlapping criteria");

    auto* mpcs_cmd = app.add_subcommand("mpcs", "Similarity between two disorders");
    mpcs_cmd->add_option("a", path_a, "First disorder spec")->required();
    mpcs_cmd->add_option("b", path_b, "Second disorder spec")->required();
    mpcs_cmd->add_option("--agg", agg, "Aggregation")
        ->check(CLI::IsMember({"mean", "max"}));
    mpcs_cmd->add_option("--mode", mode, "Computation mode")
        ->check(CLI::IsMember({"auto", "brute", "conditional"}));
    mpcs_cmd->add_flag("--mp", mp, "Compare maximum profiles instead of AP");
    mpcs_cmd->add_flag("--oracle", use_oracle, "Cross-check with the naive oracle");
    mpcs_cmd->add_flag("--json", as_json, "Machine-readable report");
    mpcs_cmd->add_option("--threads", threads, "Worker threads");
    mpcs_cmd->add_option("--out", out_path, "Output path (default stdout)");
    mpcs_cmd->add_option("--row-cap", row_cap, "Row cap for overlapping criteria");
    mpcs_cmd->add_option("--published-count", published_kv,
                         "NAME=N profile-count override");

    auto* reduce = app.add_subcommand("reduce", "Conditional-generator reduction");
    reduce->add_option("a", path_a, "First disorder spec")->required();
    reduce->add_option("b", path_b, "Second disorder spec")->required();
    reduce->add_flag("--json", as_json, "Machine-readable report");
    reduce->add_option("--out", out_path, "Output path (default stdout)");

    auto* eval = app.add_subcommand("eval", "Evaluate a single generator");
    eval->add_option("generator", expr,
                     "Inline DSL generator (starts with '[') or a file path")
        ->required();
    eval->add_flag("--oracle", use_oracle, "Cross-check with the naive oracle");
    eval->add_option("--out", out_path, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (app.got_subcommand(validate)) return cmd_validate(paths);
        if (app.got_subcommand(count)) return cmd_count(paths, kDefaultEvalCap);
        if (app.got_subcommand(exp)) {
            EnumerateOptions eopt;
            eopt.row_cap = row_cap;
            return cmd_export(paths, out_path, mp, eopt);
        }
        if (app.got_subcommand(mpcs_cmd)) {
            MpcsConfig cfg;
            cfg.agg = agg;
            cfg.mode = mode;
            cfg.mp = mp;
            cfg.oracle = use_oracle;
            cfg.as_json = as_json;
            cfg.threads = threads;
            cfg.out_path = out_path;
            cfg.published_kv = published_kv;
            cfg.row_cap = row_cap;
            return cmd_mpcs(path_a, path_b, cfg);
        }
        if (app.got_subcommand(reduce))
            return cmd_reduce(path_a, path_b, out_path, as_json);
        if (app.got_subcommand(eval)) return cmd_eval(expr, out_path, use_oracle);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}
