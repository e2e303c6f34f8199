// permrec: command-line front end for the permutation reconstruction library.
//
// Exit codes: 0 ok / unique, 1 failure / inconsistent, 2 ambiguous, 64 usage.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "permrec/permrec.hpp"

using namespace permrec;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitAmbiguous = 2;
constexpr int kExitUsage = 64;

struct RunConfig {
    std::string command;
    std::string format = "json";
    int workers = 1;
    std::string cache_dir;
    std::size_t max_ball = SearchLimits{}.max_ball_size;
    int max_whole_n = SearchLimits{}.max_whole_graph_degree;

    std::vector<std::string> graphs{"T"};
    std::string n = "4";
    int r = 1;
    std::uint64_t seed = 1;
    std::size_t trials = 1000;
    std::optional<std::size_t> m;
    std::string mode = "honest";
    std::string policy = "uniform";
    bool records = false;
    std::string suite = "all";
    int max_n = 5;
    std::string patterns;
    std::string edges;
    std::string builtin;
};

// Fields each command reads; only these are echoed.
Json echo(const RunConfig& c) {
    Json j;
    j["command"] = c.command;
    j["format"] = c.format;
    j["workers"] = c.workers;
    j["cache_dir"] = c.cache_dir.empty() ? Json(nullptr) : Json(c.cache_dir);
    j["max_ball"] = c.max_ball;
    j["max_whole_n"] = c.max_whole_n;
    const std::string& cmd = c.command;
    if (cmd == "report" || cmd == "simulate") j["graph"] = c.graphs;
    if (cmd == "report" || cmd == "simulate" || cmd == "classes" || cmd == "factorizations" || cmd == "probe-conjecture") {
        j["n"] = c.n;
    }
    if (cmd == "reconstruct") j["graph"] = c.graphs.front();
    if (cmd != "verify" && cmd != "classes" && cmd != "factorizations") j["r"] = c.r;
    if (cmd == "simulate" || cmd == "verify") {
        j["seed"] = c.seed;
        j["trials"] = c.trials;
    }
    if (cmd == "simulate") {
        j["m"] = optional_json(c.m);
        j["mode"] = c.mode;
        j["policy"] = c.policy;
        j["records"] = c.records;
    }
    if (cmd == "verify") {
        j["suite"] = c.suite;
        j["max_n"] = c.max_n;
    }
    if (cmd == "reconstruct") j["patterns"] = c.patterns;
    if (cmd == "graph-import") {
        j["edges"] = c.edges.empty() ? Json(nullptr) : Json(c.edges);
        j["builtin"] = c.builtin.empty() ? Json(nullptr) : Json(c.builtin);
    }
    return j;
}

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// "5" or "3..6".
std::pair<int, int> parse_n_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        std::size_t used = 0;
        if (dots == std::string::npos) {
            const int v = std::stoi(text, &used);
            if (used != text.size()) throw UsageError("");
            return {v, v};
        }
        const std::string lo_text = text.substr(0, dots);
        const std::string hi_text = text.substr(dots + 2);
        const int lo = std::stoi(lo_text, &used);
        if (used != lo_text.size()) throw UsageError("");
        const int hi = std::stoi(hi_text, &used);
        if (used != hi_text.size() || hi < lo) throw UsageError("");
        return {lo, hi};
    } catch (const std::exception&) {
        throw UsageError("invalid --n '" + text + "' (expected N or LO..HI)");
    }
}

std::vector<int> n_values(const RunConfig& c, int min_n) {
    const auto [lo, hi] = parse_n_range(c.n);
    if (lo < min_n || hi > kMaxDegree) {
        throw UsageError("--n must lie in " + std::to_string(min_n) + ".." + std::to_string(kMaxDegree));
    }
    std::vector<int> out;
    for (int n = lo; n <= hi; ++n) out.push_back(n);
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
    std::string out;
    for (const auto& s : items) out += (out.empty() ? "" : sep) + s;
    return out;
}

// One command's output in the three formats.
struct Document {
    Json results = Json::array();
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;
    std::vector<std::string> pretty;
};

void emit(const RunConfig& c, const Document& doc, std::ostream& out) {
    if (c.format == "json") {
        Json j;
        j["config"] = echo(c);
        j["results"] = doc.results;
        out << j.dump(2) << '\n';
    } else if (c.format == "csv") {
        out << "# config: " << echo(c).dump() << '\n';
        out << join(doc.csv_header, ",") << '\n';
        for (const auto& row : doc.csv_rows) {
            std::vector<std::string> quoted;
            for (const auto& f : row) quoted.push_back(csv_field(f));
            out << join(quoted, ",") << '\n';
        }
    } else {
        out << "config: " << echo(c).dump() << '\n';
        for (const auto& line : doc.pretty) out << line << '\n';
    }
}

std::string opt_text(const std::optional<Int>& v) { return v ? std::to_string(*v) : "absent"; }

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(line);
    while (std::getline(in, cur, ',')) out.push_back(cur);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

void add_graph_report(Document& doc, const GraphReport& rep, Json extra = Json::object()) {
    Json j = to_json(rep);
    for (auto& [k, v] : extra.items()) j[k] = v;
    doc.results.push_back(std::move(j));
    if (doc.csv_header.empty()) doc.csv_header = split_csv_line(csv_header());
    for (const auto& row : csv_rows(rep)) doc.csv_rows.push_back(split_csv_line(row));
    std::ostringstream head;
    head << rep.generator_kind << (rep.n ? " n=" + std::to_string(*rep.n) : "") << ": v=" << rep.v
         << " k=" << (rep.k ? std::to_string(*rep.k) : "irregular") << " lambda=" << rep.lambda << " mu=" << rep.mu
         << " diameter=" << (rep.diameter ? std::to_string(*rep.diameter) : "n/a");
    doc.pretty.push_back(head.str());
    for (const auto& [rr, v] : rep.n_r) doc.pretty.push_back("  N(G," + std::to_string(rr) + ") = " + std::to_string(v));
    for (const auto& [s, v] : rep.n_s) {
        std::string line = "  N_" + std::to_string(s) + "(G," + std::to_string(rep.r) + ") = " + opt_text(v);
        const auto w = rep.witnesses.find(s);
        if (w != rep.witnesses.end() && !w->second.empty()) line += "  e.g. " + w->second.front();
        doc.pretty.push_back(line);
    }
    for (auto& [k, v] : extra.items()) doc.pretty.push_back("  " + k + " = " + v.dump());
}

struct Context {
    RunConfig cfg;
    MetricOptions metric;
    std::unique_ptr<BallCache> cache;

    explicit Context(RunConfig c) : cfg(std::move(c)) {
        if (cfg.format != "json" && cfg.format != "csv" && cfg.format != "pretty") {
            throw UsageError("--format must be json, csv or pretty");
        }
        metric.workers = cfg.workers;
        metric.limits.max_ball_size = cfg.max_ball;
        metric.limits.max_whole_graph_degree = cfg.max_whole_n;
        if (!cfg.cache_dir.empty()) {
            cache = std::make_unique<BallCache>(cfg.cache_dir);
            metric.cache = cache.get();
        }
    }
};

GeneratorKind kind_of(const std::string& s) {
    try {
        return parse_generator_kind(s);
    } catch (const ParseError& e) {
        throw UsageError(e.what());
    }
}

int cmd_report(Context& ctx, std::ostream& out) {
    Document doc;
    for (const auto& name : ctx.cfg.graphs) {
        const GeneratorKind kind = kind_of(name);
        for (int n : n_values(ctx.cfg, 2)) {
            add_graph_report(doc, cayley_graph_report(GeneratorSet::make(kind, n), ctx.cfg.r, ctx.metric));
        }
    }
    emit(ctx.cfg, doc, out);
    return kExitOk;
}

int cmd_verify(Context& ctx, std::ostream& out) {
    VerifyConfig vc;
    vc.max_n = ctx.cfg.max_n;
    vc.metric = ctx.metric;
    vc.trials = ctx.cfg.trials;
    vc.seed = ctx.cfg.seed;
    std::vector<VerifyRow> rows;
    try {
        rows = run_verify(ctx.cfg.suite, vc);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    Document doc;
    doc.csv_header = {"id", "claim", "instance", "expected", "measured", "verdict", "reason"};
    std::size_t pass = 0, fail = 0, skip = 0;
    for (const auto& r : rows) {
        doc.results.push_back(to_json(r));
        doc.csv_rows.push_back({r.id, r.claim, r.instance, r.expected, r.measured, std::string(to_string(r.verdict)), r.reason});
        char line[512];
        std::snprintf(line, sizeof line, "%-7s %-40s %-22s expected %-16s measured %s%s", std::string(to_string(r.verdict)).c_str(),
                      r.id.c_str(), r.instance.c_str(), r.expected.c_str(), r.measured.c_str(),
                      r.reason.empty() ? "" : ("  (" + r.reason + ")").c_str());
        doc.pretty.emplace_back(line);
        pass += r.verdict == Verdict::Pass ? 1 : 0;
        fail += r.verdict == Verdict::Fail ? 1 : 0;
        skip += r.verdict == Verdict::Skip ? 1 : 0;
    }
    doc.pretty.push_back(std::to_string(pass) + " passed, " + std::to_string(fail) + " failed, " + std::to_string(skip) + " skipped");
    emit(ctx.cfg, doc, out);
    return all_passed(rows) ? kExitOk : kExitFailure;
}

std::vector<Permutation> read_patterns(const std::string& path) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-") {
        file.open(path);
        if (!file) throw UsageError("cannot open pattern file '" + path + "'");
        in = &file;
    }
    std::vector<Permutation> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(*in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        try {
            Permutation p = parse_permutation(line);
            if (!out.empty() && p.degree() != out.front().degree()) {
                throw ParseError("degree " + std::to_string(p.degree()) + " differs from " + std::to_string(out.front().degree()));
            }
            out.push_back(p);
        } catch (const ParseError& e) {
            throw ParseError(e.what(), lineno);
        }
    }
    if (out.empty()) throw ParseError("pattern file holds no permutations");
    return out;
}

int cmd_reconstruct(Context& ctx, std::ostream& out) {
    if (ctx.cfg.patterns.empty()) throw UsageError("--patterns is required");
    const auto patterns = read_patterns(ctx.cfg.patterns);
    const GeneratorSet g = GeneratorSet::make(kind_of(ctx.cfg.graphs.front()), patterns.front().degree());
    const auto res = reconstruct(patterns, ctx.cfg.r, g, ctx.metric.limits);
    Document doc;
    Json j;
    j["status"] = std::string(to_string(res.status));
    j["patterns"] = res.patterns_used;
    Json cands = Json::array();
    for (const auto& c : res.candidates) cands.push_back(to_string(c));
    j["candidates"] = cands;
    doc.results.push_back(j);
    doc.csv_header = {"status", "candidate"};
    for (const auto& c : res.candidates) doc.csv_rows.push_back({std::string(to_string(res.status)), to_string(c)});
    if (res.candidates.empty()) doc.csv_rows.push_back({std::string(to_string(res.status)), ""});
    doc.pretty.push_back(std::string(to_string(res.status)) + " (" + std::to_string(res.candidates.size()) + " candidates from " +
                         std::to_string(res.patterns_used) + " patterns)");
    for (const auto& c : res.candidates) doc.pretty.push_back("  " + to_string(c));
    emit(ctx.cfg, doc, out);
    switch (res.status) {
    case ReconstructionStatus::Unique: return kExitOk;
    case ReconstructionStatus::Ambiguous: return kExitAmbiguous;
    case ReconstructionStatus::Inconsistent: return kExitFailure;
    }
    return kExitFailure;
}

int cmd_simulate(Context& ctx, std::ostream& out) {
    ExperimentMode mode;
    if (ctx.cfg.mode == "honest") mode = ExperimentMode::Honest;
    else if (ctx.cfg.mode == "adversarial") mode = ExperimentMode::Adversarial;
    else throw UsageError("--mode must be honest or adversarial");
    ErrorCountPolicy policy;
    if (ctx.cfg.policy == "uniform") policy = ErrorCountPolicy::UniformUpToR;
    else if (ctx.cfg.policy == "exact") policy = ErrorCountPolicy::ExactlyR;
    else throw UsageError("--policy must be uniform or exact");
    Document doc;
    doc.csv_header = split_csv_line(experiment_csv_header());
    for (const auto& name : ctx.cfg.graphs) {
        const GeneratorKind kind = kind_of(name);
        for (int n : n_values(ctx.cfg, 2)) {
            ExperimentConfig ec{GeneratorSet::make(kind, n), ctx.cfg.r, ctx.cfg.trials, ctx.cfg.seed, ctx.cfg.m, mode, policy, ctx.metric};
            const auto s = run_experiment(ec);
            Json j = to_json(s);
            if (ctx.cfg.records) {
                Json recs = Json::array();
                for (const auto& t : s.records) recs.push_back(to_json(t));
                j["records"] = std::move(recs);
            }
            doc.results.push_back(std::move(j));
            doc.csv_rows.push_back(split_csv_line(experiment_csv_row(s)));
            char line[256];
            std::snprintf(line, sizeof line, "%s n=%d r=%d %s: N=%lld m=%zu trials=%zu unique=%zu ambiguous=%zu inconsistent=%zu rate=%.6f",
                          s.generator_kind.c_str(), s.n, s.r, s.mode.c_str(), static_cast<long long>(s.reconstruction_number), s.m,
                          s.trials, s.unique, s.ambiguous, s.inconsistent, s.unique_rate());
            doc.pretty.emplace_back(line);
        }
    }
    emit(ctx.cfg, doc, out);
    return kExitOk;
}

int cmd_factorizations(Context& ctx, std::ostream& out) {
    Document doc;
    doc.csv_header = {"n", "cycle_type", "class_size", "transpositions", "factorizations"};
    for (int n : n_values(ctx.cfg, 1)) {
        for (const auto& ct : all_cycle_types(n)) {
            const auto f = denes_factorization_count(ct);
            Json j;
            j["n"] = n;
            j["cycle_type"] = to_string(ct);
            j["class_size"] = conjugacy_class_size(ct);
            j["transpositions"] = ct.sphere_index();
            j["factorizations"] = f.count;
            j["degenerate"] = f.degenerate;
            doc.results.push_back(j);
            doc.csv_rows.push_back({std::to_string(n), to_string(ct), std::to_string(conjugacy_class_size(ct)),
                                    std::to_string(ct.sphere_index()), std::to_string(f.count)});
            doc.pretty.push_back("n=" + std::to_string(n) + "  " + to_string(ct) + "  i=" + std::to_string(ct.sphere_index()) +
                                 "  factorizations=" + std::to_string(f.count));
        }
    }
    emit(ctx.cfg, doc, out);
    return kExitOk;
}

int cmd_classes(Context& ctx, std::ostream& out) {
    Document doc;
    doc.csv_header = {"n", "cycle_type", "class_size", "sphere", "c", "a", "b"};
    for (int n : n_values(ctx.cfg, 1)) {
        for (const auto& ct : all_cycle_types(n)) {
            const auto lp = transposition_local_params(ct);
            Json j;
            j["n"] = n;
            j["cycle_type"] = to_string(ct);
            j["class_size"] = conjugacy_class_size(ct);
            j["sphere"] = ct.sphere_index();
            j["representative"] = to_string(class_representative(ct));
            j["c"] = lp.c;
            j["a"] = lp.a;
            j["b"] = lp.b;
            doc.results.push_back(j);
            doc.csv_rows.push_back({std::to_string(n), to_string(ct), std::to_string(conjugacy_class_size(ct)),
                                    std::to_string(ct.sphere_index()), std::to_string(lp.c), std::to_string(lp.a), std::to_string(lp.b)});
            doc.pretty.push_back("n=" + std::to_string(n) + "  " + to_string(ct) + "  size=" + std::to_string(conjugacy_class_size(ct)) +
                                 "  sphere=" + std::to_string(ct.sphere_index()) + "  (c,a,b)=(" + std::to_string(lp.c) + "," +
                                 std::to_string(lp.a) + "," + std::to_string(lp.b) + ")");
        }
    }
    emit(ctx.cfg, doc, out);
    return kExitOk;
}

int cmd_probe(Context& ctx, std::ostream& out) {
    Document doc;
    doc.csv_header = {"kind", "n", "r", "n_value", "attaining_s", "attaining_classes", "three_cycle_overlap",
                      "three_cycle_attains", "n2_at_r", "n2_at_r2"};
    for (int n : n_values(ctx.cfg, 3)) {
        ConjectureProbe p;
        try {
            p = probe_three_cycle_conjecture(n, ctx.cfg.r, ctx.metric);
        } catch (const DomainError& e) {
            throw UsageError(e.what());
        }
        doc.results.push_back(to_json(p));
        std::vector<std::string> s_list;
        for (int s : p.attaining_s) s_list.push_back(std::to_string(s));
        auto opt = [](const std::optional<Int>& v) { return v ? std::to_string(*v) : std::string(); };
        doc.csv_rows.push_back({"probe", std::to_string(n), std::to_string(p.r), std::to_string(p.value), join(s_list, ";"),
                                join(p.attaining_classes, ";"), std::to_string(p.three_cycle_overlap),
                                p.three_cycle_attains ? "true" : "false", opt(p.n2_at_r), opt(p.n2_at_r2)});
        doc.pretty.push_back("probe n=" + std::to_string(n) + " r=" + std::to_string(p.r) + ": N = " + std::to_string(p.value) +
                             " at s=" + join(s_list, ",") + " by " + join(p.attaining_classes, ", ") + "; 3-cycle overlap " +
                             std::to_string(p.three_cycle_overlap) + (p.three_cycle_attains ? " (attains)" : " (does not attain)") +
                             "; N_2(.,r) = " + opt_text(p.n2_at_r) + ", N_2(.,2) = " + opt_text(p.n2_at_r2));
    }
    emit(ctx.cfg, doc, out);
    return kExitOk;
}

SmallGraph builtin_graph(const std::string& spec) {
    std::vector<int> args;
    std::string name = spec;
    const auto colon = spec.find(':');
    if (colon != std::string::npos) {
        name = spec.substr(0, colon);
        std::istringstream in(spec.substr(colon + 1));
        std::string part;
        while (std::getline(in, part, ':')) {
            try {
                std::size_t used = 0;
                args.push_back(std::stoi(part, &used));
                if (used != part.size()) throw UsageError("");
            } catch (const std::exception&) {
                throw UsageError("invalid --builtin argument '" + part + "'");
            }
        }
    }
    auto need = [&](std::size_t k) {
        if (args.size() != k) throw UsageError("--builtin " + name + " takes " + std::to_string(k) + " argument(s)");
    };
    if (name == "hamming") return need(2), SmallGraph::hamming(args[0], args[1]);
    if (name == "johnson") return need(2), SmallGraph::johnson(args[0], args[1]);
    if (name == "multipartite") return need(2), SmallGraph::complete_multipartite(args[0], args[1]);
    if (name == "lattice") return need(1), SmallGraph::lattice(args[0]);
    if (name == "triangular") return need(1), SmallGraph::triangular(args[0]);
    throw UsageError("unknown --builtin '" + name + "' (hamming:n:q, johnson:n:e, multipartite:t:m, lattice:q, triangular:n)");
}

int cmd_graph_import(Context& ctx, std::ostream& out) {
    if (ctx.cfg.edges.empty() == ctx.cfg.builtin.empty()) throw UsageError("give exactly one of --edges and --builtin");
    std::optional<SmallGraph> g;
    if (!ctx.cfg.builtin.empty()) {
        try {
            g = builtin_graph(ctx.cfg.builtin);
        } catch (const DomainError& e) {
            throw UsageError(e.what());
        }
    } else {
        std::ifstream in(ctx.cfg.edges);
        if (!in) throw UsageError("cannot open edge list '" + ctx.cfg.edges + "'");
        g = SmallGraph::parse_edge_list(in, ctx.cfg.edges);
    }
    const auto rep = small_graph_report(*g, ctx.cfg.r);
    Json extra;
    extra["distance_regular"] = is_distance_regular(*g).distance_regular;
    Document doc;
    add_graph_report(doc, rep, extra);
    emit(ctx.cfg, doc, out);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reconstruction numbers and ball intersections of Cayley graphs on the symmetric group", "permrec"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "TOML configuration file; command-line flags take precedence");
    app.allow_config_extras(CLI::config_extras_mode::error);

    RunConfig cfg;
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}))->capture_default_str();
    app.add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--cache-dir", cfg.cache_dir, "Directory for cached balls B_r(e)");
    app.add_option("--max-ball", cfg.max_ball, "Largest ball or search frontier, in vertices")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--max-whole-n", cfg.max_whole_n, "Largest degree for whole-graph searches")->check(CLI::Range(2, kMaxDegree))->capture_default_str();

    auto add_graphs = [&](CLI::App* sub, bool many) {
        auto* opt = sub->add_option("--graph", cfg.graphs, many ? "Generator sets: T, t, st" : "Generator set: T, t or st");
        if (!many) opt->expected(1);
        opt->capture_default_str();
    };
    auto add_n = [&](CLI::App* sub) { sub->add_option("--n", cfg.n, "Degree N or range LO..HI")->capture_default_str(); };
    auto add_r = [&](CLI::App* sub) { sub->add_option("--r", cfg.r, "Ball radius")->check(CLI::Range(1, 64))->capture_default_str(); };

    auto* report = app.add_subcommand("report", "Graph parameters and N_s(G,r) for Cay(Sym_n, S)");
    add_graphs(report, true);
    add_n(report);
    add_r(report);

    auto* verify = app.add_subcommand("verify", "Check every closed form against brute force");
    verify->add_option("--suite", cfg.suite, "Suite name or 'all'")->capture_default_str();
    verify->add_option("--max-n", cfg.max_n, "Largest degree to check")->check(CLI::Range(3, 10))->capture_default_str();
    verify->add_option("--trials", cfg.trials, "Trials per reconstruction row")->check(CLI::PositiveNumber)->capture_default_str();
    verify->add_option("--seed", cfg.seed, "Master seed")->capture_default_str();

    auto* rec = app.add_subcommand("reconstruct", "Decode a list of patterns");
    add_graphs(rec, false);
    add_r(rec);
    rec->add_option("--patterns", cfg.patterns, "File with one permutation per line ('-' for stdin)")->required();

    auto* sim = app.add_subcommand("simulate", "Seeded reconstruction experiments");
    add_graphs(sim, true);
    add_n(sim);
    add_r(sim);
    sim->add_option("--trials", cfg.trials, "Number of trials")->check(CLI::PositiveNumber)->capture_default_str();
    sim->add_option("--seed", cfg.seed, "Master seed")->capture_default_str();
    sim->add_option("--m", cfg.m, "Patterns per trial (default N+1, or N when adversarial)")->check(CLI::PositiveNumber);
    sim->add_option("--mode", cfg.mode, "honest or adversarial")->check(CLI::IsMember({"honest", "adversarial"}))->capture_default_str();
    sim->add_option("--policy", cfg.policy, "Errors per pattern: uniform (0..r) or exact (r)")->check(CLI::IsMember({"uniform", "exact"}))->capture_default_str();
    sim->add_flag("--records", cfg.records, "Include per-trial records");

    auto* fact = app.add_subcommand("factorizations", "Minimal transposition factorization counts per cycle type");
    add_n(fact);
    auto* classes = app.add_subcommand("classes", "Conjugacy classes with sizes and local parameters");
    add_n(classes);

    auto* probe = app.add_subcommand("probe-conjecture", "Where N(Sym_n(T), r) is attained (informational)");
    add_n(probe);
    add_r(probe);

    auto* import = app.add_subcommand("graph-import", "Parameters of an explicit small graph");
    import->add_option("--edges", cfg.edges, "Edge list file, one 'u v' pair per line");
    import->add_option("--builtin", cfg.builtin, "hamming:n:q, johnson:n:e, multipartite:t:m, lattice:q or triangular:n");
    add_r(import);

    for (auto* sub : app.get_subcommands({})) sub->allow_config_extras(CLI::config_extras_mode::error);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();

    try {
        Context ctx(cfg);
        const std::string& c = ctx.cfg.command;
        if (c == "report") return cmd_report(ctx, std::cout);
        if (c == "verify") return cmd_verify(ctx, std::cout);
        if (c == "reconstruct") return cmd_reconstruct(ctx, std::cout);
        if (c == "simulate") return cmd_simulate(ctx, std::cout);
        if (c == "factorizations") return cmd_factorizations(ctx, std::cout);
        if (c == "classes") return cmd_classes(ctx, std::cout);
        if (c == "probe-conjecture") return cmd_probe(ctx, std::cout);
        if (c == "graph-import") return cmd_graph_import(ctx, std::cout);
        throw UsageError("unknown command");
    } catch (const UsageError& e) {
        std::cerr << "permrec: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "permrec: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CapacityExceeded& e) {
        std::cerr << "permrec: capacity exceeded: " << e.what() << '\n';
        return kExitFailure;
    } catch (const DomainError& e) {
        std::cerr << "permrec: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "permrec: " << e.what() << '\n';
        return kExitFailure;
    }
}
