#include <capgraph/cli.hpp>

#include <capgraph/capacity.hpp>
#include <capgraph/graph6.hpp>
#include <capgraph/verifier.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace capgraph
{
    namespace
    {
        namespace fs = std::filesystem;
        using nlohmann::json;

        auto timestamp_now() -> std::string
        {
            auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
            std::tm tm{};
            gmtime_r(&now, &tm);
            std::ostringstream out;
            out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
            return out.str();
        }

        // Graph argument: an existing file holding a graph6 line, a
        // generator spec, or a literal graph6 string.
        auto load_graph(const std::string & input) -> Graph
        {
            std::error_code ec;
            if (fs::is_regular_file(input, ec)) {
                std::ifstream in(input);
                std::string line;
                if (! std::getline(in, line))
                    throw FormatError{"could not read a graph6 line from " + input, 0};
                return parse_graph6(line);
            }
            try {
                return generate(input);
            }
            catch (const ParameterError &) {
                return parse_graph6(input);
            }
        }

        // Persistent memo for exact alpha solves, keyed by the literal
        // labeled graph. Single-writer JSON file.
        class MemoCache
        {
        public:
            MemoCache(const std::string & directory, bool enabled) :
                _enabled(enabled && ! directory.empty())
            {
                if (! _enabled)
                    return;
                fs::create_directories(directory);
                _path = fs::path(directory) / "alpha-cache.json";
                if (fs::exists(_path)) {
                    std::ifstream in(_path);
                    try {
                        in >> _entries;
                    }
                    catch (const json::exception &) {
                        throw Error{"cache file is corrupt: " + _path.string()};
                    }
                }
                if (! _entries.is_object())
                    _entries = json::object();
            }

            auto lookup(const std::string & key) -> const json *
            {
                if (! _enabled || ! _entries.contains(key)) {
                    ++_misses;
                    return nullptr;
                }
                ++_hits;
                return &_entries.at(key);
            }

            auto store(const std::string & key, json value) -> void
            {
                if (! _enabled)
                    return;
                _entries[key] = std::move(value);
                std::ofstream out(_path);
                out << _entries.dump(1) << '\n';
            }

            auto stats() const -> json
            {
                return {{"enabled", _enabled}, {"hits", _hits}, {"misses", _misses}};
            }

        private:
            bool _enabled;
            fs::path _path;
            json _entries = json::object();
            int _hits = 0, _misses = 0;
        };

        struct CommonFlags
        {
            std::string cache_dir;
            bool no_cache = false;
            bool verify_cache = false;
            std::string format = "table";
            std::uint64_t budget_nodes = AlphaOptions{}.max_nodes;
            double budget_seconds = AlphaOptions{}.max_seconds;

            auto alpha_options() const -> AlphaOptions
            {
                return {budget_nodes, budget_seconds};
            }
        };

        auto add_common(CLI::App * cmd, CommonFlags & flags) -> void
        {
            cmd->add_option("--cache-dir", flags.cache_dir, "directory for the alpha memo cache");
            cmd->add_flag("--no-cache", flags.no_cache, "bypass the cache");
            cmd->add_flag("--verify-cache", flags.verify_cache,
                "recompute cached values and fail on mismatch");
            cmd->add_option("--format", flags.format, "output format")
                ->check(CLI::IsMember({"json", "table"}));
            cmd->add_option("--budget-nodes", flags.budget_nodes, "search node budget");
            cmd->add_option("--budget-seconds", flags.budget_seconds, "wall clock budget");
        }

        auto emit(std::ostream & out, const json & document, const std::string & format) -> void
        {
            if (format == "json") {
                out << document.dump(2) << '\n';
                return;
            }
            for (auto & [key, value] : document.items())
                out << key << " " << (value.is_string() ? value.get<std::string>() : value.dump())
                    << '\n';
        }

        auto cached_alpha(const Graph & g, const AlphaOptions & options, MemoCache & cache)
            -> std::pair<AlphaResult, bool>
        {
            std::string key = emit_graph6(g) + "|alpha";
            if (auto * hit = cache.lookup(key)) {
                AlphaResult result;
                result.value = hit->at("value").get<int>();
                result.witness = hit->at("witness").get<StableSetWitness>();
                result.stats.nodes = hit->at("nodes").get<std::uint64_t>();
                return {result, true};
            }
            auto result = alpha(g, options);
            cache.store(key, {{"value", result.value}, {"witness", result.witness},
                {"nodes", result.stats.nodes}});
            return {result, false};
        }
    }

    auto run_cli(const std::vector<std::string> & args, std::ostream & out,
        std::ostream & err) -> int
    {
        CLI::App app{"graph semiring capacity toolkit"};
        app.require_subcommand(1);

        CommonFlags flags;

        // gen
        std::string gen_spec, gen_out;
        auto * gen = app.add_subcommand("gen", "emit a generated or parsed graph as graph6");
        gen->add_option("spec", gen_spec, "generator spec or graph6")->required();
        gen->add_option("--out", gen_out, "output file (default stdout)");

        // alpha
        std::string alpha_input;
        int alpha_power = 1;
        auto * alpha_cmd = app.add_subcommand("alpha", "exact stable set number with witness");
        alpha_cmd->add_option("graph", alpha_input, "graph6 file, spec or literal")->required();
        alpha_cmd->add_option("--power", alpha_power, "solve the k-th strong power");
        add_common(alpha_cmd, flags);

        // theta
        std::string theta_input;
        double theta_tol = 1e-6;
        auto * theta_cmd = app.add_subcommand("theta", "Lovasz number with certificates");
        theta_cmd->add_option("graph", theta_input, "graph6 file, spec or literal")->required();
        theta_cmd->add_option("--tol", theta_tol, "certified gap tolerance");
        add_common(theta_cmd, flags);

        // capacity
        std::string capacity_input;
        int capacity_kmax = 2;
        double capacity_tol = 1e-6;
        auto * capacity_cmd = app.add_subcommand("capacity",
            "certified Shannon capacity enclosure");
        capacity_cmd->add_option("graph", capacity_input, "graph6 file, spec or literal")
            ->required();
        capacity_cmd->add_option("--kmax", capacity_kmax, "largest power in the lower sweep");
        capacity_cmd->add_option("--tol", capacity_tol, "theta tolerance");
        add_common(capacity_cmd, flags);

        // eval
        std::string eval_poly, eval_graphs, eval_out;
        bool eval_alpha = false, eval_theta = false;
        auto * eval_cmd = app.add_subcommand("eval", "evaluate a polynomial over graphs");
        eval_cmd->add_option("polynomial", eval_poly, "polynomial text")->required();
        eval_cmd->add_option("graphs", eval_graphs, "comma-separated graph specs")->required();
        eval_cmd->add_option("--out", eval_out, "write the result as graph6");
        eval_cmd->add_flag("--alpha", eval_alpha, "also report alpha of the result");
        eval_cmd->add_flag("--theta", eval_theta, "also report theta of the result");
        add_common(eval_cmd, flags);

        // verify
        std::string verify_config, verify_report, verify_report_dir;
        std::uint64_t verify_seed = SuiteConfig{}.seed;
        bool verify_inject = false;
        auto * verify_cmd = app.add_subcommand("verify", "run the identity-check suite");
        verify_cmd->add_option("--config", verify_config, "suite config JSON file");
        verify_cmd->add_option("--seed", verify_seed, "random seed");
        verify_cmd->add_option("--report", verify_report, "report file");
        verify_cmd->add_option("--report-dir", verify_report_dir,
            "directory for append-only reports");
        verify_cmd->add_flag("--inject-failure", verify_inject,
            "add the failing harness self-test");
        add_common(verify_cmd, flags);

        std::vector<const char *> argv;
        argv.push_back("capgraph");
        for (auto & a : args)
            argv.push_back(a.c_str());

        try {
            app.parse(int(argv.size()), argv.data());
        }
        catch (const CLI::CallForHelp & e) {
            out << app.help();
            return 0;
        }
        catch (const CLI::ParseError & e) {
            err << e.what() << '\n';
            return 2;
        }

        try {
            if (gen->parsed()) {
                auto g = load_graph(gen_spec);
                std::string line = emit_graph6(g);
                if (gen_out.empty())
                    out << line << '\n';
                else {
                    std::ofstream file(gen_out);
                    file << line << '\n';
                }
                return 0;
            }

            MemoCache cache(flags.cache_dir, ! flags.no_cache);

            if (alpha_cmd->parsed()) {
                auto g = power(load_graph(alpha_input), alpha_power);
                auto [result, from_cache] = cached_alpha(g, flags.alpha_options(), cache);
                if (from_cache && flags.verify_cache) {
                    auto fresh = alpha(g, flags.alpha_options());
                    if (fresh.value != result.value) {
                        err << "cache mismatch: stored " << result.value << ", recomputed "
                            << fresh.value << '\n';
                        return 1;
                    }
                }
                emit(out, {{"alpha", result.value}, {"witness", result.witness},
                    {"nodes", result.stats.nodes}, {"seconds", result.stats.seconds},
                    {"cache", cache.stats()}}, flags.format);
                return 0;
            }

            if (theta_cmd->parsed()) {
                auto result = theta(load_graph(theta_input), theta_tol);
                emit(out, {{"theta", result.value}, {"lower_cert", result.lower_cert},
                    {"upper_cert", result.upper_cert}, {"gap", result.gap},
                    {"iterations", result.iterations}}, flags.format);
                return 0;
            }

            if (capacity_cmd->parsed()) {
                CapacityOptions options;
                options.kmax = capacity_kmax;
                options.tol = capacity_tol;
                options.alpha_budget = flags.alpha_options();
                auto interval = capacity_interval(load_graph(capacity_input), options);
                emit(out, {{"lower", interval.lower}, {"upper", interval.upper},
                    {"width", interval.width()}, {"lower_k", interval.lower_k},
                    {"lower_alpha", interval.lower_alpha},
                    {"upper_source", interval.upper_source},
                    {"skipped_k", interval.skipped_k}, {"graph6", interval.graph6}},
                    flags.format);
                return 0;
            }

            if (eval_cmd->parsed()) {
                std::vector<Graph> graphs;
                std::stringstream split(eval_graphs);
                std::string piece;
                while (std::getline(split, piece, ','))
                    graphs.push_back(load_graph(piece));
                auto p = parse_polynomial(eval_poly, graphs.size());
                if (p.nvars() > graphs.size())
                    throw ParameterError{"polynomial uses more variables than graphs given"};
                auto result = evaluate(p, graphs);
                json document = {{"polynomial", p.to_string()},
                    {"vertices", result.vertex_count()}, {"edges", result.edge_count()}};
                if (! eval_out.empty()) {
                    std::ofstream file(eval_out);
                    file << emit_graph6(result) << '\n';
                    document["out"] = eval_out;
                }
                if (eval_alpha) {
                    auto [r, hit] = cached_alpha(result, flags.alpha_options(), cache);
                    document["alpha"] = r.value;
                }
                if (eval_theta)
                    document["theta"] = theta(result, 1e-6).value;
                emit(out, document, flags.format);
                return 0;
            }

            if (verify_cmd->parsed()) {
                SuiteConfig config;
                if (! verify_config.empty()) {
                    std::ifstream in(verify_config);
                    if (! in)
                        throw ParameterError{"cannot open config file " + verify_config};
                    json j;
                    try {
                        in >> j;
                    }
                    catch (const json::exception & e) {
                        throw ParameterError{"config parse error: " + std::string(e.what())};
                    }
                    config = SuiteConfig::from_json(j);
                }
                if (verify_cmd->count("--seed") > 0)
                    config.seed = verify_seed;
                if (verify_inject)
                    config.inject_failure = true;

                auto report = run_suite(config);
                json document = {{"version", tool_version}, {"timestamp", timestamp_now()},
                    {"report", report.to_json()}, {"cache", cache.stats()}};

                if (! verify_report.empty()) {
                    std::ofstream file(verify_report);
                    file << document.dump(2) << '\n';
                }
                if (! verify_report_dir.empty()) {
                    fs::create_directories(verify_report_dir);
                    auto name = "report-" + timestamp_now() + "-" +
                        std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()) +
                        ".json";
                    std::ofstream file(fs::path(verify_report_dir) / name);
                    file << document.dump(2) << '\n';
                }

                int passed = int(report.results.size()) - report.failures;
                out << "checks " << report.results.size() << " passed " << passed
                    << " failed " << report.failures << '\n';
                if (flags.format == "json")
                    out << document.dump(2) << '\n';
                return report.hard_failure() ? 1 : 0;
            }
        }
        catch (const BudgetError & e) {
            err << "budget exhausted: " << e.what() << " (nodes " << e.nodes << ")\n";
            return 3;
        }
        catch (const ConvergenceError & e) {
            err << "no convergence: " << e.what() << " best gap " << e.best_gap() << '\n';
            return 3;
        }
        catch (const Error & e) {
            err << "error: " << e.what() << '\n';
            return 2;
        }

        err << "no subcommand\n";
        return 2;
    }
}
