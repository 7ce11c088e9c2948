#include "freecurve/serialize.hpp"

#include <stdexcept>

namespace freecurve {

namespace {

Json point_json(const GridPoint& p) { return Json::array({p.i, p.j, p.k}); }

GridPoint point_from_json(const Json& j) {
    return {j.at(0).get<int>(), j.at(1).get<int>(), j.at(2).get<int>()};
}

Json poly_json(const HomPoly& p) {
    return Json{{"degree", p.degree()}, {"text", p.to_string()}};
}

HomPoly poly_from_json(const Json& j) {
    std::string text = j.at("text").get<std::string>();
    if (text == "0") return HomPoly(j.at("degree").get<int>());
    return HomPoly::parse(text);
}

}  // namespace

Json segment_json(const MaximalSegment& s) {
    Json points = Json::array();
    for (const auto& p : s.points) points.push_back(point_json(p));
    return Json{{"n", s.n},
                {"points", points},
                {"extremes", Json::array({point_json(s.extreme_p), point_json(s.extreme_q)})},
                {"d", s.d}};
}

Json component_json(const ComponentDescriptor& c) {
    Json out;
    switch (c.kind) {
        case ComponentKind::Trivial: out["kind"] = "trivial"; break;
        case ComponentKind::Singleton: out["kind"] = "singleton"; break;
        case ComponentKind::Segment: out["kind"] = "segment"; break;
    }
    if (c.point) out["point"] = point_json(*c.point);
    if (c.segment) out["segment"] = segment_json(*c.segment);
    out["tied"] = c.tied;
    Json forms = Json::array();
    for (const auto& f : c.linear_forms) forms.push_back(Json::array({f[0], f[1], f[2]}));
    out["linear_forms"] = forms;
    return out;
}

Json constraint_json(const Constraint& c) {
    if (c.terms.empty()) throw std::invalid_argument("empty constraint");
    const auto& first = c.terms.front();
    Json out;
    out["form"] = first.abc_form
                      ? Json::array({(*first.abc_form)[0], (*first.abc_form)[1], (*first.abc_form)[2]})
                      : Json(nullptr);
    out["coeff"] = first.coeff.str();
    if (sgn(first.factor - 1) != 0) out["factor"] = rat_to_string(first.factor);
    if (c.terms.size() > 1) {
        const auto& second = c.terms[1];
        Json coupled;
        coupled["name"] = second.coeff.str();
        coupled["ratio"] = rat_to_string(second.factor / first.factor);
        if (second.abc_form)
            coupled["form"] =
                Json::array({(*second.abc_form)[0], (*second.abc_form)[1], (*second.abc_form)[2]});
        out["coupled"] = coupled;
    } else {
        out["coupled"] = nullptr;
    }
    return out;
}

Json certificate_json(const CurveCertificate& cert) {
    Json out;
    out["n"] = cert.n;
    out["g"] = poly_json(cert.g);
    out["abc"] = Json::array({cert.abc[0].get_str(), cert.abc[1].get_str(), cert.abc[2].get_str()});
    out["family"] = cert.family;
    if (!cert.notice.empty()) out["notice"] = cert.notice;
    out["segment"] = cert.segment ? segment_json(*cert.segment) : Json(nullptr);
    Json linear = Json::array(), high = Json::array();
    for (std::size_t r = 0; r < 3; ++r) {
        linear.push_back(poly_json(cert.matrix.linear[r]));
        high.push_back(poly_json(cert.matrix.high[r]));
    }
    out["matrix"] = Json{{"n", cert.matrix.n}, {"linear", linear}, {"high", high}};
    return out;
}

Json verdict_json(const FreenessVerdict& v) {
    Json out;
    out["is_free"] = v.is_free;
    out["exponents"] =
        v.exponents ? Json::array({v.exponents->first, v.exponents->second}) : Json(nullptr);
    if (v.tjurina >= 0) out["tjurina"] = v.tjurina;
    Json profile = Json::array();
    for (const auto& row : v.profile) profile.push_back(Json::array({row[0], row[1], row[2]}));
    out["profile"] = profile;
    Json qh = Json::array();
    for (const auto& q : v.qh_points) {
        qh.push_back(Json{{"point", Json::array({rat_to_string(q.point[0]),
                                                 rat_to_string(q.point[1]),
                                                 rat_to_string(q.point[2])})},
                          {"rank", q.rank},
                          {"qh", q.quasi_homogeneous}});
    }
    out["qh"] = qh;
    return out;
}

CurveCertificate certificate_from_json(const Json& j) {
    CurveCertificate cert;
    cert.n = j.at("n").get<int>();
    cert.g = poly_from_json(j.at("g"));
    for (std::size_t s = 0; s < 3; ++s)
        cert.abc[s] = Int(j.at("abc").at(s).get<std::string>());
    cert.family = j.at("family").get<std::string>();
    if (j.contains("notice")) cert.notice = j.at("notice").get<std::string>();
    if (!j.at("segment").is_null()) {
        const Json& s = j.at("segment");
        std::vector<GridPoint> pts;
        for (const auto& p : s.at("points")) pts.push_back(point_from_json(p));
        cert.segment = segment_through(s.at("n").get<int>(), pts.front(), pts.back());
        if (cert.segment->points != pts)
            throw std::invalid_argument("segment points are not a maximal segment");
    }
    const Json& m = j.at("matrix");
    cert.matrix.n = m.at("n").get<int>();
    for (std::size_t r = 0; r < 3; ++r) {
        cert.matrix.linear[r] = poly_from_json(m.at("linear").at(r));
        cert.matrix.high[r] = poly_from_json(m.at("high").at(r));
    }
    return cert;
}

}  // namespace freecurve
