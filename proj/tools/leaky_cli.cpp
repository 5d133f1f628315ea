#include "leaky/cache.hpp"
#include "leaky/chamber.hpp"
#include "leaky/covers.hpp"
#include "leaky/crosscheck.hpp"
#include "leaky/fock.hpp"
#include "leaky/json_io.hpp"
#include "leaky/walls.hpp"
#include "leaky/xgraph.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

using namespace leaky;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitInvariantViolation = 2;

std::vector<int> parse_csv_ints(const std::string& csv)
{
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

std::vector<int> parse_signs(const std::string& s)
{
    // accepts "+,+,-,-" or "++--"
    std::vector<int> out;
    for (char c : s) {
        if (c == '+')
            out.push_back(1);
        else if (c == '-')
            out.push_back(-1);
        else if (c != ',')
            throw CLI::ValidationError("--signs", "expected only + - ,");
    }
    return out;
}

std::optional<CacheStore> open_cache(const std::string& flag_dir)
{
    std::string dir = flag_dir;
    if (dir.empty()) {
        if (const char* env = std::getenv("LEAKY_CACHE_DIR"))
            dir = env;
    }
    if (dir.empty())
        return std::nullopt;
    return CacheStore(dir);
}

struct CountOptions {
    int genus = 0;
    std::string entries_csv;
    int leak = 0;
    std::string method = "all";
    std::string normalization = "labeled";
    std::string operator_sign = "corrected";
    bool json = false;
    std::string cache_dir;
};

Rational count_by_method(const RamificationProfile& profile, const std::string& method,
                         const std::string& normalization, const std::string& sign)
{
    const Normalization norm = normalization == "centralizer"
                                   ? Normalization::paper_centralizer
                                   : Normalization::labeled_ends;
    const CutJoinSign cj =
        sign == "printed" ? CutJoinSign::printed : CutJoinSign::corrected;
    if (method == "enumerate")
        return leaky_count(profile);
    if (method == "fock")
        return leaky_count_fock(profile, norm, cj);
    if (method == "xgraph")
        return leaky_count_xgraphs(profile);
    throw CLI::ValidationError("--method", "unknown method " + method);
}

int run_count(const CountOptions& opt)
{
    RamificationProfile profile =
        make_profile(opt.genus, parse_csv_ints(opt.entries_csv), opt.leak);
    auto cache = open_cache(opt.cache_dir);

    std::vector<std::string> methods;
    if (opt.method == "all")
        methods = {"enumerate", "fock", "xgraph"};
    else
        methods = {opt.method};

    Json out = Json::object();
    out["profile"] = profile_to_json(profile);
    Json values = Json::object();
    std::optional<Rational> reference;
    bool disagreement = false;
    for (const std::string& m : methods) {
        const std::string norm = m == "fock" ? opt.normalization : "";
        Rational value;
        bool from_cache = false;
        if (cache) {
            if (auto hit = cache->lookup(profile, m, norm)) {
                value = hit->value;
                from_cache = true;
            }
        }
        if (!from_cache) {
            value = count_by_method(profile, m, opt.normalization, opt.operator_sign);
            if (cache)
                cache->store(ComputationRecord{profile, m, norm, value});
        }
        values[m] = rational_to_string(value);
        if (!reference)
            reference = value;
        else if (*reference != value)
            disagreement = true;
    }
    out["values"] = values;

    if (opt.json) {
        std::cout << out.dump(2) << "\n";
    } else {
        if (methods.size() == 1) {
            std::cout << values[methods[0]].get<std::string>() << "\n";
        } else {
            std::cout << profile_to_string(profile) << "\n";
            for (const std::string& m : methods)
                std::cout << "  " << m << ": " << values[m].get<std::string>()
                          << "\n";
        }
    }
    if (disagreement) {
        std::cerr << "error: methods disagree on " << profile_to_string(profile)
                  << "\n";
        return kExitInvariantViolation;
    }
    return kExitOk;
}

int run_enumerate(int genus, const std::string& csv, int leak, bool json)
{
    RamificationProfile profile = make_profile(genus, parse_csv_ints(csv), leak);
    const auto covers = enumerate_covers(profile);
    if (json) {
        Json arr = Json::array();
        for (const LeakyCover& c : covers)
            arr.push_back(cover_to_json(c));
        std::cout << Json{{"profile", profile_to_json(profile)},
                          {"count", rational_to_string(leaky_count(profile))},
                          {"covers", arr}}
                         .dump(2)
                  << "\n";
        return kExitOk;
    }
    std::cout << covers.size() << " cover classes of " << profile_to_string(profile)
              << "\n";
    for (const LeakyCover& c : covers) {
        std::cout << "  edges:";
        for (const CoverEdge& e : c.bounded_edges)
            std::cout << " (" << e.source + 1 << "->" << e.target + 1 << " w"
                      << e.weight << ")";
        std::cout << "  ends:";
        for (size_t i = 0; i < c.end_vertex.size(); ++i)
            std::cout << " " << i + 1 << "@v" << c.end_vertex[i] + 1;
        std::cout << "  mult " << rational_to_string(cover_multiplicity(c)) << "\n";
    }
    std::cout << "total " << rational_to_string(leaky_count(profile)) << "\n";
    return kExitOk;
}

int run_fock(const std::string& mu_csv, const std::string& nu_csv, int leak, int power,
             const std::string& sign, bool json)
{
    const Partition mu = make_partition(parse_csv_ints(mu_csv));
    const Partition nu = make_partition(parse_csv_ints(nu_csv));
    const CutJoinSign cj =
        sign == "printed" ? CutJoinSign::printed : CutJoinSign::corrected;
    const Rational me = matrix_element(mu, leak, power, nu, cj);
    if (json) {
        std::cout << Json{{"mu", mu},
                          {"nu", nu},
                          {"leak", leak},
                          {"power", power},
                          {"operator_sign", sign},
                          {"matrix_element", rational_to_string(me)}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << rational_to_string(me) << "\n";
    }
    return kExitOk;
}

int run_xgraphs(int genus, int n, bool json)
{
    const auto& graphs = enumerate_x_graphs(genus, n);
    if (json) {
        Json arr = Json::array();
        for (const XGraph& xg : graphs)
            arr.push_back(xgraph_to_json(xg));
        std::cout << Json{{"genus", genus}, {"n", n}, {"xgraphs", arr}}.dump(2)
                  << "\n";
        return kExitOk;
    }
    std::cout << graphs.size() << " x-graphs for genus " << genus << " with " << n
              << " ends\n";
    for (const XGraph& xg : graphs) {
        std::cout << "  edges:";
        for (auto [a, b] : xg.edges)
            std::cout << " (" << a + 1 << "-" << b + 1 << ")";
        std::cout << "  ends:";
        for (size_t i = 0; i < xg.end_vertex.size(); ++i)
            std::cout << " " << i + 1 << "@v" << xg.end_vertex[i] + 1;
        std::cout << "  |Aut| " << xgraph_automorphism_order(xg) << "\n";
    }
    return kExitOk;
}

int run_walls(int genus, int n, int leak, const std::string& signs_str,
              const std::string& variant_str, bool json)
{
    const std::vector<int> signs = parse_signs(signs_str);
    const WallVariant variant = variant_str == "theorem"
                                    ? WallVariant::theorem_printed
                                    : WallVariant::example_consistent;
    const auto walls = candidate_walls(genus, n, leak, signs, variant);
    if (json) {
        Json arr = Json::array();
        for (const Wall& w : walls)
            arr.push_back(wall_to_json(w));
        std::cout << arr.dump(2) << "\n";
        return kExitOk;
    }
    for (const Wall& w : walls)
        std::cout << wall_to_string(w) << "\n";
    if (walls.empty())
        std::cout << "(no candidate wall meets the region)\n";
    return kExitOk;
}

int run_chamber(int genus, int n, int leak, const std::string& signs_str,
                const std::string& box_str, const std::string& variant_str, bool json)
{
    const std::vector<int> signs = parse_signs(signs_str);
    SampleBox box;
    for (const std::string& part : [&] {
             std::vector<std::string> parts;
             std::stringstream ss(box_str);
             std::string item;
             while (std::getline(ss, item, ','))
                 parts.push_back(item);
             return parts;
         }()) {
        const auto colon = part.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("--box", "expected lo:hi,lo:hi,...");
        box.ranges.push_back({std::stoi(part.substr(0, colon)),
                              std::stoi(part.substr(colon + 1))});
    }
    if (static_cast<int>(box.ranges.size()) != n - 1)
        throw CLI::ValidationError("--box", "need exactly n-1 ranges");

    // report walls of both variants along with the fit
    PiecewiseReport report;
    for (auto variant :
         {WallVariant::example_consistent, WallVariant::theorem_printed})
        for (const Wall& w : candidate_walls(genus, n, leak, signs, variant))
            report.walls.push_back(w);
    (void)variant_str;

    const auto points = box_profiles(genus, n, leak, signs, box);
    const bool wall_free = box_avoids_walls(points, report.walls);
    report.chambers.push_back(chamber_polynomial(genus, n, leak, signs, box));

    if (json) {
        Json j = piecewise_report_to_json(report);
        j["box_avoids_all_candidate_walls"] = wall_free;
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    const ChamberReport& c = report.chambers.front();
    std::vector<std::string> names;
    for (int i = 1; i < n; ++i)
        names.push_back("x" + std::to_string(i));
    std::cout << "chamber polynomial (degree bound " << c.degree_bound
              << "): " << polynomial_to_string(c.polynomial, names) << "\n";
    std::cout << "training points " << c.training_points << ", validated on "
              << c.validation_points << ", wall-free box: "
              << (wall_free ? "yes" : "NO") << "\n";
    return kExitOk;
}

int run_crosscheck_cmd(int max_genus, int max_n, int max_entry,
                       const std::string& leaks_csv, int jobs, bool json)
{
    CrosscheckSpec spec;
    spec.max_genus = max_genus;
    spec.max_n = max_n;
    spec.max_entry = max_entry;
    spec.leaks = parse_csv_ints(leaks_csv);
    spec.jobs = jobs;
    const CrosscheckReport report = run_crosscheck(spec);

    if (json) {
        Json rows = Json::array();
        for (const CrosscheckRow& row : report.rows) {
            rows.push_back(
                {{"profile", profile_to_json(row.profile)},
                 {"enumerate", rational_to_string(row.by_enumeration)},
                 {"fock_labeled", rational_to_string(row.by_fock_labeled)},
                 {"xgraph", rational_to_string(row.by_xgraph)},
                 {"fock_centralizer", rational_to_string(row.by_fock_centralizer)},
                 {"fock_printed_sign",
                  rational_to_string(row.by_fock_printed_sign)},
                 {"cover_classes", row.cover_classes},
                 {"primaries_agree", row.primaries_agree},
                 {"centralizer_matches", row.centralizer_matches},
                 {"printed_sign_matches", row.printed_sign_matches},
                 {"determinant_identity", row.determinant_identity}});
        }
        std::cout << Json{{"grid",
                           {{"max_genus", spec.max_genus},
                            {"max_n", spec.max_n},
                            {"max_entry", spec.max_entry},
                            {"leaks", spec.leaks}}},
                          {"profiles", report.profiles},
                          {"primary_disagreements", report.primary_disagreements},
                          {"centralizer_deviations", report.centralizer_deviations},
                          {"printed_sign_deviations",
                           report.printed_sign_deviations},
                          {"all_primaries_agree", report.all_primaries_agree},
                          {"all_determinants_match", report.all_determinants_match},
                          {"rows", rows}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "profiles checked: " << report.profiles << "\n"
                  << "primary pipelines agree: "
                  << (report.all_primaries_agree ? "yes" : "NO") << "\n"
                  << "lattice determinant identity: "
                  << (report.all_determinants_match ? "holds" : "VIOLATED") << "\n"
                  << "paper-centralizer normalization deviations: "
                  << report.centralizer_deviations << "\n"
                  << "printed-sign operator deviations: "
                  << report.printed_sign_deviations << "\n";
        for (const CrosscheckRow& row : report.rows) {
            if (row.primaries_agree)
                continue;
            std::cout << "DISAGREEMENT " << profile_to_string(row.profile)
                      << ": enumerate " << rational_to_string(row.by_enumeration)
                      << ", fock " << rational_to_string(row.by_fock_labeled)
                      << ", xgraph " << rational_to_string(row.by_xgraph) << "\n";
        }
    }
    return report.all_primaries_agree ? kExitOk : kExitInvariantViolation;
}

int run_cache_cmd(const std::string& cache_dir, const std::string& action, int genus,
                  const std::string& csv, int leak, const std::string& method,
                  const std::string& normalization, bool json)
{
    auto cache = open_cache(cache_dir);
    if (!cache) {
        std::cerr << "error: no cache directory (use --cache-dir or LEAKY_CACHE_DIR)\n";
        return kExitInputError;
    }
    if (action == "lookup") {
        RamificationProfile profile = make_profile(genus, parse_csv_ints(csv), leak);
        auto hit = cache->lookup(profile, method, normalization);
        if (!hit) {
            std::cerr << "not found\n";
            return kExitInputError;
        }
        if (json) {
            std::cout << Json{{"profile", profile_to_json(hit->profile)},
                              {"method", hit->method},
                              {"normalization", hit->normalization},
                              {"value", rational_to_string(hit->value)},
                              {"version", hit->version},
                              {"timestamp", hit->timestamp}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << rational_to_string(hit->value) << "\n";
        }
        return kExitOk;
    }
    std::cerr << "error: unknown cache action " << action << "\n";
    return kExitInputError;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{
        "exact counts of k-leaky tropical covers and double Hurwitz numbers\n"
        "three mutually independent pipelines: cover enumeration, a bosonic\n"
        "transfer operator, and x-graph lattice sums"};
    app.require_subcommand(1);

    // count
    auto* count = app.add_subcommand("count", "compute L_g(x,k) (H_g(x) when k=0)");
    CountOptions copt;
    count->add_option("-g,--genus", copt.genus, "genus")->required();
    count->add_option("-x,--profile", copt.entries_csv, "comma separated entries")
        ->required();
    count->add_option("-k,--leak", copt.leak, "leak parameter")->default_val(0);
    count->add_option("--method", copt.method, "enumerate|fock|xgraph|all")
        ->default_val("all")
        ->check(CLI::IsMember({"enumerate", "fock", "xgraph", "all"}));
    count->add_option("--normalization", copt.normalization, "labeled|centralizer")
        ->default_val("labeled")
        ->check(CLI::IsMember({"labeled", "centralizer"}));
    count->add_option("--operator-sign", copt.operator_sign, "corrected|printed")
        ->default_val("corrected")
        ->check(CLI::IsMember({"corrected", "printed"}));
    count->add_flag("--json", copt.json, "emit JSON");
    count->add_option("--cache-dir", copt.cache_dir, "result cache directory");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "list cover classes");
    int eg = 0, ek = 0;
    std::string ex;
    bool ejson = false;
    enumerate->add_option("-g,--genus", eg)->required();
    enumerate->add_option("-x,--profile", ex)->required();
    enumerate->add_option("-k,--leak", ek)->default_val(0);
    enumerate->add_flag("--json", ejson);

    // fock
    auto* fock = app.add_subcommand("fock", "raw transfer-operator matrix elements");
    std::string fmu, fnu, fsign = "corrected";
    int fk = 0, fr = 0;
    bool fjson = false;
    fock->add_option("--mu", fmu, "bra partition, comma separated")->required();
    fock->add_option("--nu", fnu, "ket partition, comma separated")->required();
    fock->add_option("-k,--leak", fk)->default_val(0);
    fock->add_option("-r,--power", fr, "operator power")->required();
    fock->add_option("--operator-sign", fsign)
        ->default_val("corrected")
        ->check(CLI::IsMember({"corrected", "printed"}));
    fock->add_flag("--json", fjson);

    // xgraphs
    auto* xg = app.add_subcommand("xgraphs", "list x-graph isomorphism classes");
    int xgg = 0, xgn = 0;
    bool xgjson = false;
    xg->add_option("-g,--genus", xgg)->required();
    xg->add_option("-n,--ends", xgn)->required();
    xg->add_flag("--json", xgjson);

    // walls
    auto* walls = app.add_subcommand("walls", "candidate chamber walls");
    int wg = 0, wn = 0, wk = 0;
    std::string wsigns, wvariant = "example";
    bool wjson = false;
    walls->add_option("-g,--genus", wg)->required();
    walls->add_option("-n,--ends", wn)->required();
    walls->add_option("-k,--leak", wk)->default_val(0);
    walls->add_option("--signs", wsigns, "sign pattern, e.g. ++-- or +,+,-,-")
        ->required();
    walls->add_option("--wall-variant", wvariant, "example|theorem")
        ->default_val("example")
        ->check(CLI::IsMember({"example", "theorem"}));
    walls->add_flag("--json", wjson);

    // chamber
    auto* chamber = app.add_subcommand("chamber", "interpolate a chamber polynomial");
    int cg = 0, cn = 0, ck = 0;
    std::string csigns, cbox, cvariant = "example";
    bool cjson = false;
    chamber->add_option("-g,--genus", cg)->required();
    chamber->add_option("-n,--ends", cn)->required();
    chamber->add_option("-k,--leak", ck)->default_val(0);
    chamber->add_option("--signs", csigns)->required();
    chamber->add_option("--box", cbox, "free-coordinate ranges lo:hi,lo:hi,...")
        ->required();
    chamber->add_option("--wall-variant", cvariant)->default_val("example");
    chamber->add_flag("--json", cjson);

    // crosscheck
    auto* cross = app.add_subcommand("crosscheck", "three-pipeline conformance sweep");
    int xmax_g = 1, xmax_n = 3, xmax_e = 5, xjobs = 1;
    std::string xleaks = "0,1";
    bool xjson = false;
    cross->add_option("--max-genus", xmax_g)->default_val(1);
    cross->add_option("--max-n", xmax_n)->default_val(3);
    cross->add_option("--max-entry", xmax_e)->default_val(5);
    cross->add_option("--leaks", xleaks, "comma separated leak values")
        ->default_val("0,1");
    cross->add_option("-j,--jobs", xjobs)->default_val(1);
    cross->add_flag("--json", xjson);

    // cache
    auto* cachecmd = app.add_subcommand("cache", "inspect the result cache");
    std::string cc_dir, cc_action = "lookup", cc_x, cc_method = "enumerate",
                cc_norm;
    int cc_g = 0, cc_k = 0;
    bool cc_json = false;
    cachecmd->add_option("--cache-dir", cc_dir);
    cachecmd->add_option("--action", cc_action, "lookup")->default_val("lookup");
    cachecmd->add_option("-g,--genus", cc_g);
    cachecmd->add_option("-x,--profile", cc_x);
    cachecmd->add_option("-k,--leak", cc_k)->default_val(0);
    cachecmd->add_option("--method", cc_method)->default_val("enumerate");
    cachecmd->add_option("--normalization", cc_norm)->default_val("");
    cachecmd->add_flag("--json", cc_json);

    try {
        app.parse(argc, argv);
        if (count->parsed())
            return run_count(copt);
        if (enumerate->parsed())
            return run_enumerate(eg, ex, ek, ejson);
        if (fock->parsed())
            return run_fock(fmu, fnu, fk, fr, fsign, fjson);
        if (xg->parsed())
            return run_xgraphs(xgg, xgn, xgjson);
        if (walls->parsed())
            return run_walls(wg, wn, wk, wsigns, wvariant, wjson);
        if (chamber->parsed())
            return run_chamber(cg, cn, ck, csigns, cbox, cvariant, cjson);
        if (cross->parsed())
            return run_crosscheck_cmd(xmax_g, xmax_n, xmax_e, xleaks, xjobs, xjson);
        if (cachecmd->parsed())
            return run_cache_cmd(cc_dir, cc_action, cc_g, cc_x, cc_k, cc_method,
                                 cc_norm, cc_json);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInputError;
    } catch (const profile_error& e) {
        std::cerr << "error: invalid profile: " << e.what() << "\n";
        return kExitInputError;
    } catch (const interpolation_failure& e) {
        std::cerr << "error: interpolation failed: " << e.what() << "\n";
        return kExitInvariantViolation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
