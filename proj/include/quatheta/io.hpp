#pragma once

#include <json.hpp>
#include <string>

#include "aqmodules.hpp"

namespace quatheta::io {

using json = nlohmann::json;

inline json to_json(HalfInt h) {
    if (h.is_integer()) return h.as_int();
    return std::to_string(h.twice) + "/2";
}

inline HalfInt halfint_from_json(const json& j) {
    if (j.is_number_integer()) return HalfInt(j.get<std::int64_t>());
    if (j.is_string()) return parse_halfint(j.get<std::string>());
    throw DomainError("expected an integer or \"p/2\" string");
}

inline json to_json(const Weight& w) {
    json a = json::array();
    for (auto& x : w.c) a.push_back(to_json(x));
    return a;
}

inline Weight weight_from_json(const json& j) {
    if (!j.is_array()) throw DomainError("expected a weight array");
    Weight w;
    for (auto& x : j) w.c.push_back(halfint_from_json(x));
    return w;
}

// list of {"hw","mult"}, sorted by hw
inline json to_json(const IsoDecomp& d) {
    json a = json::array();
    for (auto& [hw, k] : d.terms) a.push_back({{"hw", to_json(hw)}, {"mult", k}});
    return a;
}

inline IsoDecomp isodecomp_from_json(const std::string& group, const json& j) {
    IsoDecomp d{group, {}};
    for (auto& t : j) d.terms[weight_from_json(t.at("hw"))] += t.at("mult").get<std::int64_t>();
    return d;
}

inline json module_body(const QuatModule& m) {
    json wm = json::array();
    for (auto& w : m.wm) wm.push_back(to_json(w));
    return {{"G", m.G}, {"wm", wm}, {"s", m.s}};
}

inline json to_json(const QuatModule& m) {
    json j = module_body(m);
    j["quotient"] = m.quotient == Quotient::sigma;
    return j;
}

inline QuatModule module_from_json(const json& j, std::optional<Quotient> q = std::nullopt) {
    QuatModule m;
    m.G = j.at("G").get<std::string>();
    for (auto& w : j.at("wm")) m.wm.push_back(weight_from_json(w));
    m.s = j.at("s").get<std::int64_t>();
    if (q) m.quotient = *q;
    else m.quotient = j.at("quotient").get<bool>() ? Quotient::sigma : Quotient::A;
    return m;
}

inline json to_json(const ThetaLift& t) {
    json j = {{"zero", t.zero}, {"upper_bound", t.upper_bound}};
    if (!t.sign.empty()) j["sign"] = t.sign;
    if (t.terms.size() == 1) {
        auto& [m, k] = t.terms.front();
        j[m.quotient == Quotient::sigma ? "sigma" : "A"] = module_body(m);
        j["mult"] = k;
    } else if (!t.terms.empty()) {
        json a = json::array();
        for (auto& [m, k] : t.terms) a.push_back({{"module", to_json(m)}, {"mult", k}});
        j["terms"] = a;
    }
    return j;
}

inline ThetaLift theta_from_json(const json& j) {
    ThetaLift t;
    t.zero = j.at("zero").get<bool>();
    t.upper_bound = j.at("upper_bound").get<bool>();
    if (j.contains("sign")) t.sign = j.at("sign").get<std::string>();
    for (auto [key, q] : {std::pair{"sigma", Quotient::sigma}, std::pair{"A", Quotient::A}})
        if (j.contains(key)) t.terms.push_back({module_from_json(j.at(key), q), j.at("mult").get<std::int64_t>()});
    if (j.contains("terms"))
        for (auto& e : j.at("terms")) t.terms.push_back({module_from_json(e.at("module")), e.at("mult").get<std::int64_t>()});
    return t;
}

inline json to_json(const Spin2Module& m) {
    json a = json::array();
    for (auto& [w, k] : m) a.push_back({{"weight", to_json(w)}, {"mult", k}});
    return a;
}

inline Spin2Module spin2_from_json(const json& j) {
    Spin2Module m;
    for (auto& e : j) m[halfint_from_json(e.at("weight"))] += e.at("mult").get<std::int64_t>();
    return m;
}

inline json su2_json(const SU2Decomp& d) {
    json a = json::array();
    for (auto& [hw, k] : d) a.push_back({{"hw", json::array({hw})}, {"mult", k}});
    return a;
}

inline SU2Decomp su2_from_json(const json& j) {
    SU2Decomp d;
    for (auto& e : j) d[e.at("hw").at(0).get<std::int64_t>()] += e.at("mult").get<std::int64_t>();
    return d;
}

template <class V, class F>
json branch_json(const std::string& rule, const Weight& lambda, const std::map<Weight, V>& res, F&& module) {
    json r = json::array();
    for (auto& [mu, v] : res) r.push_back({{"mu", to_json(mu)}, {"module", module(v)}});
    return {{"rule", rule}, {"lambda", to_json(lambda)}, {"result", r}};
}

inline json to_json(const KTypeLedger& L) {
    json lv = json::array();
    for (auto& l : L.levels) lv.push_back({{"k", l.k}, {"su0", l.su0}, {"tau", to_json(l.tau)}});
    return {{"module", to_json(L.module)}, {"truncation", L.truncation}, {"levels", lv}};
}

inline KTypeLedger ledger_from_json(const json& j) {
    KTypeLedger L;
    L.module = module_from_json(j.at("module"));
    L.truncation = j.at("truncation").get<std::int64_t>();
    std::string msys = quaternionic_structure(L.module.G).m_system;
    for (auto& l : j.at("levels"))
        L.levels.push_back({l.at("k").get<std::int64_t>(), l.at("su0").get<std::int64_t>(), isodecomp_from_json(msys, l.at("tau"))});
    return L;
}

inline json to_json(const InfChar& c) { return {{"system", c.system}, {"value", to_json(c.value)}}; }

inline InfChar infchar_from_json(const json& j) {
    return {j.at("system").get<std::string>(), weight_from_json(j.at("value"))};
}

inline json triple_json(const Triple& t) { return json::array({t[0], t[1], t[2]}); }

inline Triple triple_from_json(const json& j) { return {j.at(0).get<std::int64_t>(), j.at(1).get<std::int64_t>(), j.at(2).get<std::int64_t>()}; }

inline json to_json(const AqData& d) {
    json u = json::array();
    for (auto& t : d.u_cap_p) u.push_back(triple_json(t));
    json j = {{"group", to_string(d.c.group)},
              {"case", d.c.id},
              {"lambda", triple_json(d.c.lambda)},
              {"inf_char", triple_json(d.inf_char)},
              {"mu", triple_json(d.minimal_type_abc)},
              {"xy", json::array({d.minimal_type_xy[0], d.minimal_type_xy[1]})},
              {"u_cap_p", u}};
    if (d.c.group == AqGroup::PU21) j["u2"] = json::array({d.u2_type[0], d.u2_type[1]});
    return j;
}

inline AqData aqdata_from_json(const json& j) {
    AqData d;
    d.c = {parse_aq_group(j.at("group").get<std::string>()), j.at("case").get<std::string>(), triple_from_json(j.at("lambda"))};
    d.inf_char = triple_from_json(j.at("inf_char"));
    d.minimal_type_abc = triple_from_json(j.at("mu"));
    d.minimal_type_xy = {j.at("xy").at(0).get<std::int64_t>(), j.at("xy").at(1).get<std::int64_t>()};
    for (auto& t : j.at("u_cap_p")) d.u_cap_p.push_back(triple_from_json(t));
    if (j.contains("u2")) d.u2_type = {j.at("u2").at(0).get<std::int64_t>(), j.at("u2").at(1).get<std::int64_t>()};
    return d;
}

inline json xy_list(const std::vector<XY>& v) {
    json a = json::array();
    for (auto& p : v) a.push_back(json::array({p[0], p[1]}));
    return a;
}

inline json to_json(const ThetaUnitary& t) {
    json j = {{"zero", t.zero}, {"if_nonzero", t.if_nonzero}, {"segment", xy_list(t.segment)}};
    if (t.minimal_type) j["minimal_type"] = json::array({(*t.minimal_type)[0], (*t.minimal_type)[1]});
    if (!t.g2_case.empty()) j["g2_case"] = t.g2_case;
    return j;
}

inline ThetaUnitary theta_unitary_from_json(const json& j) {
    ThetaUnitary t;
    t.zero = j.at("zero").get<bool>();
    t.if_nonzero = j.at("if_nonzero").get<bool>();
    for (auto& p : j.at("segment")) t.segment.push_back({p.at(0).get<std::int64_t>(), p.at(1).get<std::int64_t>()});
    if (j.contains("minimal_type")) t.minimal_type = XY{j["minimal_type"][0].get<std::int64_t>(), j["minimal_type"][1].get<std::int64_t>()};
    if (j.contains("g2_case")) t.g2_case = j.at("g2_case").get<std::string>();
    return t;
}

}  // namespace quatheta::io
