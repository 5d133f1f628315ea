#include "leaky/json_io.hpp"

#include <stdexcept>

namespace leaky {

namespace {

Rational rational_from_json(const Json& j)
{
    auto q = parse_rational(j.get<std::string>());
    if (!q)
        throw std::invalid_argument("bad rational string: " + j.dump());
    return *q;
}

}  // namespace

Json profile_to_json(const RamificationProfile& p)
{
    return Json{{"genus", p.genus}, {"leak", p.leak}, {"entries", p.entries}};
}

RamificationProfile profile_from_json(const Json& j)
{
    return make_profile(j.at("genus").get<int>(),
                        j.at("entries").get<std::vector<int>>(),
                        j.at("leak").get<int>());
}

Json cover_to_json(const LeakyCover& c)
{
    Json edges = Json::array();
    for (const CoverEdge& e : c.bounded_edges)
        edges.push_back({e.source + 1, e.target + 1, e.weight});
    Json ends = Json::array();
    for (size_t i = 0; i < c.end_vertex.size(); ++i)
        ends.push_back({{"label", static_cast<int>(i) + 1},
                        {"vertex", c.end_vertex[i] + 1}});
    return Json{{"vertices", c.vertex_count()},
                {"edges", edges},
                {"ends", ends},
                {"multiplicity", rational_to_string(cover_multiplicity(c))},
                {"profile", profile_to_json(c.profile)}};
}

LeakyCover cover_from_json(const Json& j)
{
    LeakyCover c;
    c.profile = profile_from_json(j.at("profile"));
    for (const auto& e : j.at("edges"))
        c.bounded_edges.push_back(CoverEdge{e.at(0).get<int>() - 1,
                                            e.at(1).get<int>() - 1,
                                            e.at(2).get<int>()});
    c.end_vertex.assign(c.profile.n(), -1);
    for (const auto& end : j.at("ends"))
        c.end_vertex.at(end.at("label").get<size_t>() - 1) =
            end.at("vertex").get<int>() - 1;
    return c;
}

Json fock_to_json(const FockVector& v)
{
    Json out = Json::object();
    for (const auto& [mu, c] : v)
        out[Json(mu).dump()] = rational_to_string(c);
    return out;
}

FockVector fock_from_json(const Json& j)
{
    FockVector v;
    for (auto it = j.begin(); it != j.end(); ++it) {
        Partition mu = Json::parse(it.key()).get<std::vector<int>>();
        v[mu] = rational_from_json(it.value());
    }
    return v;
}

Json polynomial_to_json(const MultivariatePolynomial& p)
{
    Json terms = Json::object();
    for (const auto& [exp, c] : p.terms)
        terms[Json(exp).dump()] = rational_to_string(c);
    return Json{{"nvars", p.nvars}, {"terms", terms}};
}

MultivariatePolynomial polynomial_from_json(const Json& j)
{
    MultivariatePolynomial p;
    p.nvars = j.at("nvars").get<int>();
    const Json& terms = j.at("terms");
    for (auto it = terms.begin(); it != terms.end(); ++it) {
        std::vector<int> exp = Json::parse(it.key()).get<std::vector<int>>();
        p.add_term(exp, rational_from_json(it.value()));
    }
    return p;
}

Json xgraph_to_json(const XGraph& xg)
{
    Json edges = Json::array();
    for (auto [a, b] : xg.edges)
        edges.push_back({a + 1, b + 1});
    Json ends = Json::array();
    for (size_t i = 0; i < xg.end_vertex.size(); ++i)
        ends.push_back({{"label", static_cast<int>(i) + 1},
                        {"vertex", xg.end_vertex[i] + 1}});
    return Json{{"vertices", xg.vertex_count},
                {"edges", edges},
                {"ends", ends},
                {"automorphisms", xgraph_automorphism_order(xg)}};
}

Json wall_to_json(const Wall& w)
{
    return Json{{"subset", w.subset},
                {"genus_part", w.genus_part},
                {"constant", w.constant},
                {"variant", w.variant == WallVariant::example_consistent
                                ? "example"
                                : "theorem"},
                {"equation", wall_to_string(w)}};
}

Wall wall_from_json(const Json& j)
{
    Wall w;
    w.subset = j.at("subset").get<std::vector<int>>();
    w.genus_part = j.at("genus_part").get<int>();
    w.constant = j.at("constant").get<long long>();
    w.variant = j.at("variant").get<std::string>() == "example"
                    ? WallVariant::example_consistent
                    : WallVariant::theorem_printed;
    return w;
}

Json chamber_report_to_json(const ChamberReport& r)
{
    Json box = Json::array();
    for (auto [lo, hi] : r.box.ranges)
        box.push_back({lo, hi});
    return Json{{"genus", r.genus},
                {"n", r.n},
                {"leak", r.leak},
                {"signs", r.signs},
                {"box", box},
                {"degree_bound", r.degree_bound},
                {"polynomial", polynomial_to_json(r.polynomial)},
                {"training_points", r.training_points},
                {"validation_points", r.validation_points},
                {"verified", r.verified}};
}

Json piecewise_report_to_json(const PiecewiseReport& r)
{
    Json walls = Json::array();
    for (const Wall& w : r.walls)
        walls.push_back(wall_to_json(w));
    Json chambers = Json::array();
    for (const ChamberReport& c : r.chambers)
        chambers.push_back(chamber_report_to_json(c));
    return Json{{"walls", walls}, {"chambers", chambers}};
}

}  // namespace leaky
