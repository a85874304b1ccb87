#include "snclab/cli.hpp"
#include "snclab/blowup.hpp"
#include "snclab/fixtures.hpp"
#include "snclab/losing_density.hpp"
#include "snclab/pair_io.hpp"
#include "snclab/search.hpp"
#include "snclab/theorem.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace snclab::cli {

namespace {
    using Json = nlohmann::ordered_json;

    std::string read_file(const std::string & path)
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw ParseError(path, "cannot open file");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    void write_file(const std::string & path, const std::string & text)
    {
        std::ofstream out(path, std::ios::binary);
        if (! out)
            throw ParseError(path, "cannot open file for writing");
        out << text;
    }

    std::string one_based(const std::vector<Vertex> & vs)
    {
        if (vs.empty())
            return "none";
        std::string s;
        for (Vertex v : vs)
            s += (s.empty() ? "" : " ") + std::to_string(v + 1);
        return s;
    }

    std::vector<std::int64_t> one_based_json(const std::vector<Vertex> & vs)
    {
        std::vector<std::int64_t> out;
        for (Vertex v : vs)
            out.push_back(v + 1);
        return out;
    }

    std::vector<std::int64_t> one_based_json(const VertexSet & s)
    {
        return one_based_json(s.members());
    }

    std::string set_text(const VertexSet & s)
    {
        std::string out = "{";
        bool first = true;
        for (Vertex v : s.members()) {
            out += (first ? "" : ",") + std::to_string(v + 1);
            first = false;
        }
        return out + "}";
    }

    std::string hex64(std::uint64_t x)
    {
        std::ostringstream os;
        os << "0x" << std::hex << std::setfill('0') << std::setw(16) << x;
        return os.str();
    }

    std::string ok_text(bool b) { return b ? "ok" : "FAIL"; }

    Json rationals_json(const RationalVector & v)
    {
        Json out = Json::array();
        for (Eigen::Index i = 0; i < v.size(); ++i)
            out.push_back(to_string(v(i)));
        return out;
    }

    Json inequality_json(const InequalityReport & report)
    {
        Json rows = Json::array();
        for (Eigen::Index v = 0; v < std::ssize(report.rows); ++v) {
            const VertexInequality & row = report.rows[v];
            rows.push_back(Json{{"v", v + 1}, {"lhs", to_string(row.lhs)},
                {"rhs", to_string(row.rhs)}, {"margin", to_string(row.margin)},
                {"satisfied", row.satisfied}});
        }
        return Json{{"variant", variant_name(report.variant)}, {"weighted", report.weighted},
            {"rows", rows}, {"satisfying", one_based_json(report.satisfying)},
            {"holds", report.holds()}};
    }

    void inequality_text(std::ostream & out, const InequalityReport & report)
    {
        out << "variant " << variant_name(report.variant) << ", "
            << (report.weighted ? "weighted" : "unweighted") << "\n";
        out << "  v  lhs  rhs  margin  satisfied\n";
        for (Eigen::Index v = 0; v < std::ssize(report.rows); ++v) {
            const VertexInequality & row = report.rows[v];
            out << "  " << v + 1 << "  " << to_string(row.lhs) << "  " << to_string(row.rhs)
                << "  " << to_string(row.margin) << "  " << (row.satisfied ? "yes" : "no")
                << "\n";
        }
        out << "satisfying vertices: " << one_based(report.satisfying) << "\n";
    }

    enum class Format { Text, Json };

    int cmd_fixtures_verify(int id, Format format, std::ostream & out)
    {
        FixtureVerification v = verify_fixture(id);
        if (format == Format::Json) {
            Json j{
                {"command", "fixtures-verify"},
                {"id", v.id},
                {"checksum_ok", v.checksum_ok},
                {"identity_ok", v.identity_ok},
                {"inclusion_ok", v.inclusion_ok},
                {"a_oriented_ok", v.a_oriented_ok},
                {"b_oriented_ok", v.b_oriented_ok},
                {"ab_matches", v.ab_matches},
                {"product_fails_everywhere", v.product_fails_everywhere},
                {"product_margins_minus_one", v.product_margins_minus_one},
                {"union_satisfying", one_based_json(v.union_satisfying)},
                {"blowup_vertices", v.blowup_vertices},
                {"expected_blowup_vertices", v.expected_blowup_vertices},
                {"blowup_identity_ok", v.blowup_identity_ok},
                {"blowup_fails_everywhere", v.blowup_fails_everywhere},
                {"blowup_margins_minus_one", v.blowup_margins_minus_one},
                {"mismatches", v.mismatches},
                {"ok", v.ok()},
            };
            out << j.dump(2) << "\n";
        }
        else {
            out << "fixture " << v.id << " verification\n";
            out << "  data checksum:                       " << ok_text(v.checksum_ok) << "\n";
            out << "  identity hypothesis:                 " << ok_text(v.identity_ok) << "\n";
            out << "  stated inclusion ("
                << (load_fixture(id).a_subset_b ? "A within B" : "B within A")
                << "):       " << ok_text(v.inclusion_ok) << "\n";
            out << "  A oriented after loop removal:       " << ok_text(v.a_oriented_ok) << "\n";
            out << "  B oriented after loop removal:       " << ok_text(v.b_oriented_ok) << "\n";
            out << "  recomputed AB matches printed table: " << ok_text(v.ab_matches) << "\n";
            out << "  product inequality fails everywhere: "
                << ok_text(v.product_fails_everywhere) << "\n";
            out << "  product margins all exactly -1:      "
                << ok_text(v.product_margins_minus_one) << "\n";
            out << "  union inequality satisfied at:       " << one_based(v.union_satisfying)
                << "\n";
            out << "  " << v.blowup_vertices << " blow-up vertices (expected "
                << v.expected_blowup_vertices << ")\n";
            out << "  blow-up identity hypothesis:         " << ok_text(v.blowup_identity_ok)
                << "\n";
            out << "  blow-up unweighted margins all -1:   "
                << ok_text(v.blowup_fails_everywhere && v.blowup_margins_minus_one) << "\n";
            for (const std::string & m : v.mismatches)
                out << "  mismatch: " << m << "\n";
            out << "fixture " << v.id << ": " << (v.ok() ? "PASS" : "FAIL") << "\n";
        }
        return v.ok() ? 0 : 1;
    }

    int cmd_check(const std::string & path, const std::string & variant_str, bool unweighted,
        Format format, std::ostream & out)
    {
        PairDocument doc = parse_pair_document(read_file(path));
        DigraphPair pair = document_to_pair(doc);
        WeightVector weights =
            unweighted ? uniform_weights(doc.n) : document_weights(doc);
        Variant variant = variant_str == "ab" ? Variant::Product : Variant::Union;
        InequalityReport report = product_inequality_report(pair, weights, variant);

        if (format == Format::Json) {
            Json j = inequality_json(report);
            j["command"] = "check";
            j["file"] = path;
            out << j.dump(2) << "\n";
        }
        else {
            out << "check " << path << ": ";
            inequality_text(out, report);
            out << "verdict: " << (report.holds() ? "HOLDS" : "FAILS (counterexample)") << "\n";
        }
        return report.holds() ? 0 : 1;
    }

    int cmd_hypotheses(const std::string & path, Format format, std::ostream & out)
    {
        PairDocument doc = parse_pair_document(read_file(path));
        DigraphPair pair = document_to_pair(doc);
        const bool identity_ok = check_identity_hypothesis(pair);
        const bool tournament_ok = check_tournament_pair(pair);
        if (format == Format::Json) {
            out << Json{{"command", "hypotheses"}, {"file", path},
                       {"identity", identity_ok}, {"tournament_pair", tournament_ok}}
                       .dump(2)
                << "\n";
        }
        else {
            out << "identity hypothesis (A & B^T = I):        "
                << (identity_ok ? "holds" : "fails") << "\n";
            out << "tournament pair (also A | B^T = V x V):   "
                << (tournament_ok ? "holds" : "fails") << "\n";
        }
        return identity_ok ? 0 : 1;
    }

    int cmd_blow_up(const std::string & path, const std::string & out_path, Format format,
        std::ostream & out)
    {
        PairDocument doc = parse_pair_document(read_file(path));
        DigraphPair pair = document_to_pair(doc);
        if (! doc.weights)
            throw PreconditionError("blow-up needs a \"weights\" entry with positive integers");
        WeightVector weights = document_weights(doc);

        auto [blown, map] = blow_up_pair(pair, weights);
        std::vector<std::string> labels;
        for (Vertex v = 0; v < pair.size(); ++v) {
            const std::string base =
                doc.labels ? (*doc.labels)[v] : std::to_string(v + 1);
            for (Eigen::Index i = 0; i < map.copy_count(v); ++i)
                labels.push_back(base + "_" + std::to_string(i + 1));
        }
        PairDocument blown_doc = make_document(blown, nullptr, &labels);
        write_file(out_path, serialize_pair_document(blown_doc));

        if (format == Format::Json) {
            out << Json{{"command", "blow-up"}, {"file", path}, {"output", out_path},
                       {"vertices", map.total_size()},
                       {"identity_preserved", check_identity_hypothesis(blown)}}
                       .dump(2)
                << "\n";
        }
        else {
            out << "blow-up: " << map.total_size() << " vertices written to " << out_path
                << "\n";
        }
        return 0;
    }

    int cmd_density(const std::string & path, Format format, std::ostream & out)
    {
        PairDocument doc = parse_pair_document(read_file(path));
        DigraphPair pair = document_to_pair(doc);
        Relation g = strip_loops(pair.a);
        Density density = compute_losing_density(g);
        DensityCheck check = verify_density(g, density);

        if (format == Format::Json) {
            out << Json{{"command", "density"}, {"file", path},
                       {"l", rationals_json(density.l)}, {"slack", rationals_json(density.slack)},
                       {"verified", check.ok()}, {"violations", check.violations}}
                       .dump(2)
                << "\n";
        }
        else {
            out << "losing density of A without loops (n = " << g.size() << ")\n";
            out << "  v  l  slack\n";
            for (Eigen::Index v = 0; v < density.l.size(); ++v)
                out << "  " << v + 1 << "  " << to_string(density.l(v)) << "  "
                    << to_string(density.slack(v)) << "\n";
            out << "independent verification: " << ok_text(check.ok()) << "\n";
        }
        return check.ok() ? 0 : 1;
    }

    int cmd_theorem(const std::string & path, Format format, std::ostream & out)
    {
        PairDocument doc = parse_pair_document(read_file(path));
        DigraphPair pair = document_to_pair(doc);
        WeightVector weights = document_weights(doc);
        TheoremCertificate cert = find_witness(pair, weights);

        if (format == Format::Json) {
            Json vertices = Json::array();
            for (Eigen::Index v = 0; v < std::ssize(cert.vertices); ++v) {
                const TheoremVertexRecord & r = cert.vertices[v];
                vertices.push_back(Json{{"v", v + 1}, {"s1", one_based_json(r.parts.s1)},
                    {"s2", one_based_json(r.parts.s2)},
                    {"b_only", one_based_json(r.parts.b_only)},
                    {"q", one_based_json(r.parts.q)}, {"l_s1", to_string(r.l_s1)},
                    {"l_s2", to_string(r.l_s2)}});
            }
            out << Json{{"command", "theorem"}, {"file", path}, {"witness", cert.witness + 1},
                       {"witness_lhs", to_string(cert.witness_lhs)},
                       {"witness_rhs", to_string(cert.witness_rhs)},
                       {"aggregate", to_string(cert.aggregate)},
                       {"density", rationals_json(cert.density.l)}, {"vertices", vertices}}
                       .dump(2)
                << "\n";
        }
        else {
            out << "witness vertex: " << cert.witness + 1 << "  ("
                << to_string(cert.witness_lhs) << " >= " << to_string(cert.witness_rhs)
                << ")\n";
            out << "aggregate sum: " << to_string(cert.aggregate) << "\n";
            out << "losing density:";
            for (Eigen::Index v = 0; v < cert.density.l.size(); ++v)
                out << " " << to_string(cert.density.l(v));
            out << "\n  v  l(S1)  l(S2)  S1  S2  Q\n";
            for (Eigen::Index v = 0; v < std::ssize(cert.vertices); ++v) {
                const TheoremVertexRecord & r = cert.vertices[v];
                out << "  " << v + 1 << "  " << to_string(r.l_s1) << "  " << to_string(r.l_s2)
                    << "  " << set_text(r.parts.s1) << "  " << set_text(r.parts.s2) << "  "
                    << set_text(r.parts.q) << "\n";
            }
        }
        return 0;
    }

    int cmd_search(const SearchConfig & config, bool random, Format format, std::ostream & out)
    {
        SearchReport report = random ? random_search(config) : exhaustive_search(config);

        auto finding_doc = [](const CounterexampleRecord & r) {
            return parse_pair_document(
                serialize_pair_document(make_document(r.pair, &r.weights)));
        };

        if (format == Format::Json) {
            Json findings = Json::array();
            for (const CounterexampleRecord & r : report.findings) {
                findings.push_back(Json{{"index", r.index},
                    {"variant", variant_name(r.variant)},
                    {"document",
                        Json::parse(serialize_pair_document(make_document(r.pair, &r.weights)))}});
            }
            out << Json{{"command", "search"}, {"mode", random ? "random" : "exhaustive"},
                       {"n", config.n}, {"hypothesis", hypothesis_name(config.hypothesis)},
                       {"variant", variant_name(config.variant)}, {"seed", config.seed},
                       {"examined", report.examined}, {"fingerprint", hex64(report.fingerprint)},
                       {"wall_seconds", report.wall_seconds}, {"findings", findings}}
                       .dump(2)
                << "\n";
        }
        else {
            out << "search " << (random ? "random" : "exhaustive") << ": n = " << config.n
                << ", hypothesis " << hypothesis_name(config.hypothesis) << ", variant "
                << variant_name(config.variant)
                << (config.weight_oracle ? ", with weight oracle" : "") << "\n";
            out << "examined: " << report.examined << " pairs\n";
            out << "fingerprint: " << hex64(report.fingerprint) << "\n";
            out << "wall time: " << report.wall_seconds << " s\n";
            out << "counterexamples found: " << report.findings.size() << "\n";
            for (const CounterexampleRecord & r : report.findings) {
                out << "-- finding at index " << r.index << " (variant "
                    << variant_name(r.variant) << ", re-verified):\n";
                out << serialize_pair_document(make_document(r.pair, &r.weights));
            }
            (void)finding_doc;
        }
        return report.findings.empty() ? 0 : 1;
    }
}

int run(std::vector<std::string> args, std::ostream & out, std::ostream & err)
{
    CLI::App app{"second neighbourhood laboratory: exact digraph-pair checks, densities, "
                 "certificates and counterexample search"};
    app.require_subcommand(1);

    std::string format_str = "text";
    app.add_option("--format", format_str, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    auto * fixtures_cmd = app.add_subcommand("fixtures", "operations on the embedded tables");
    fixtures_cmd->require_subcommand(1);
    auto * verify_cmd =
        fixtures_cmd->add_subcommand("verify", "re-derive every claim of a fixture");
    int fixture_id = 0;
    verify_cmd->add_option("id", fixture_id, "fixture id (1 or 2)")->required();
    verify_cmd->fallthrough();

    auto * check_cmd = app.add_subcommand("check", "per-vertex inequality report for a pair file");
    std::string check_file, check_variant = "union";
    bool check_unweighted = false;
    check_cmd->add_option("file", check_file, "pair document")->required();
    check_cmd->add_option("--variant", check_variant, "ab (product only) or union")
        ->check(CLI::IsMember({"ab", "union"}));
    check_cmd->add_flag("--unweighted", check_unweighted, "ignore the file's weights");
    check_cmd->fallthrough();

    auto * hyp_cmd = app.add_subcommand("hypotheses", "identity / tournament hypothesis checks");
    std::string hyp_file;
    hyp_cmd->add_option("file", hyp_file, "pair document")->required();
    hyp_cmd->fallthrough();

    auto * blow_cmd = app.add_subcommand("blow-up", "expand a weighted pair into an unweighted one");
    std::string blow_file, blow_out;
    blow_cmd->add_option("file", blow_file, "pair document with positive integer weights")
        ->required();
    blow_cmd->add_option("-o,--output", blow_out, "output pair document")->required();
    blow_cmd->fallthrough();

    auto * density_cmd =
        app.add_subcommand("density", "losing density of the loop-stripped A graph");
    std::string density_file;
    density_cmd->add_option("file", density_file, "pair document")->required();
    density_cmd->fallthrough();

    auto * theorem_cmd =
        app.add_subcommand("theorem", "tournament-pair witness certificate");
    std::string theorem_file;
    theorem_cmd->add_option("file", theorem_file, "pair document")->required();
    theorem_cmd->fallthrough();

    auto * search_cmd = app.add_subcommand("search", "counterexample search campaign");
    std::string search_mode, search_variant = "union", search_hypothesis = "identity";
    SearchConfig config;
    search_cmd->add_option("mode", search_mode, "exhaustive or random")
        ->required()
        ->check(CLI::IsMember({"exhaustive", "random"}));
    search_cmd->add_option("--n", config.n, "vertex count")->required();
    search_cmd->add_option("--seed", config.seed, "random seed");
    search_cmd->add_option("--iters", config.iterations, "random samples");
    search_cmd->add_option("--variant", search_variant, "ab or union")
        ->check(CLI::IsMember({"ab", "union"}));
    search_cmd->add_option("--hypothesis", search_hypothesis, "pair constraint")
        ->check(CLI::IsMember({"identity", "subset", "tournament"}));
    search_cmd->add_flag("--oracle", config.weight_oracle,
        "run the LP weight oracle on every examined pair");
    search_cmd->add_option("--width", config.width, "worker threads");
    search_cmd->add_flag("--allow-large", config.allow_large_exhaustive,
        "permit the n = 5 exhaustive run");
    search_cmd->fallthrough();

    std::reverse(args.begin(), args.end()); // CLI11 vector parse convention
    try {
        app.parse(args);
    }
    catch (const CLI::CallForHelp & e) {
        out << app.help();
        return 0;
    }
    catch (const CLI::ParseError & e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    const Format format = format_str == "json" ? Format::Json : Format::Text;
    try {
        if (verify_cmd->parsed())
            return cmd_fixtures_verify(fixture_id, format, out);
        if (check_cmd->parsed())
            return cmd_check(check_file, check_variant, check_unweighted, format, out);
        if (hyp_cmd->parsed())
            return cmd_hypotheses(hyp_file, format, out);
        if (blow_cmd->parsed())
            return cmd_blow_up(blow_file, blow_out, format, out);
        if (density_cmd->parsed())
            return cmd_density(density_file, format, out);
        if (theorem_cmd->parsed())
            return cmd_theorem(theorem_file, format, out);
        if (search_cmd->parsed()) {
            config.variant = search_variant == "ab" ? Variant::Product : Variant::Union;
            config.hypothesis = search_hypothesis == "subset" ? HypothesisMode::IdentitySubset
                : search_hypothesis == "tournament"           ? HypothesisMode::TournamentPair
                                                              : HypothesisMode::Identity;
            return cmd_search(config, search_mode == "random", format, out);
        }
        err << "usage error: no subcommand\n";
        return 2;
    }
    catch (const ParseError & e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    }
    catch (const DimensionError & e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    }
    catch (const PreconditionError & e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    }
    catch (const TheoremViolated & e) {
        err << e.what() << "\n";
        err << "instance:\n"
            << serialize_pair_document(make_document(e.pair(), &e.weights()));
        return 1;
    }
    catch (const DensityNotFound & e) {
        err << e.what() << "\n";
        return 1;
    }
    catch (const Error & e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace snclab::cli
