#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "aqmodules.hpp"

namespace quatheta::svg {

// px per unit in x; y gets the hexagonal factor 7/4
constexpr std::int64_t kUnitX = 16;
constexpr std::int64_t kUnitY = 28;

struct Cone {
    std::string label;
    std::string color;
    XY apex{};
    std::vector<XY> gens;
};

struct Figure {
    std::string title;
    std::vector<Cone> cones;
    std::int64_t xmin = -12, xmax = 24, ymin = -6, ymax = 14;
};

inline XY xy_direction(const Triple& g) { return to_xy(g); }

inline std::int64_t cross(const XY& a, const XY& b) { return a[0] * b[1] - a[1] * b[0]; }

// The two boundary directions of a pointed planar cone.
inline std::pair<XY, XY> edge_rays(const std::vector<XY>& gens) {
    if (gens.empty()) throw DomainError("cone without generators");
    XY lo = gens.front(), hi = gens.front();
    for (auto& g : gens) {
        if (cross(lo, g) < 0) lo = g;
        if (cross(g, hi) < 0) hi = g;
    }
    return {lo, hi};
}

inline Cone cone_of(const AqData& d, std::string color) {
    Cone c{d.c.id, std::move(color), d.minimal_type_xy, {}};
    for (auto& g : d.u_cap_p) c.gens.push_back(xy_direction(g));
    return c;
}

inline std::string emit(const Figure& f) {
    std::int64_t W = (f.xmax - f.xmin) * kUnitX, H = (f.ymax - f.ymin) * kUnitY;
    auto px = [&](std::int64_t x) { return (x - f.xmin) * kUnitX; };
    auto py = [&](std::int64_t y) { return (f.ymax - y) * kUnitY; };
    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H + 40 << "\" viewBox=\"0 0 " << W << " " << H + 40
      << "\">\n";
    o << "<defs><clipPath id=\"vp\"><rect x=\"0\" y=\"0\" width=\"" << W << "\" height=\"" << H << "\"/></clipPath></defs>\n";
    o << "<rect x=\"0\" y=\"0\" width=\"" << W << "\" height=\"" << H << "\" fill=\"white\" stroke=\"black\"/>\n";
    o << "<g fill=\"#bbbbbb\">\n";
    for (std::int64_t y = f.ymin; y <= f.ymax; ++y)
        for (std::int64_t x = f.xmin; x <= f.xmax; ++x)
            if ((x - y) % 2 == 0) o << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"2\"/>\n";
    o << "</g>\n";
    if (f.xmin <= 0 && 0 <= f.xmax)
        o << "<line x1=\"" << px(0) << "\" y1=\"0\" x2=\"" << px(0) << "\" y2=\"" << H << "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
    if (f.ymin <= 0 && 0 <= f.ymax)
        o << "<line x1=\"0\" y1=\"" << py(0) << "\" x2=\"" << W << "\" y2=\"" << py(0) << "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
    o << "<g clip-path=\"url(#vp)\">\n";
    std::int64_t far = (f.xmax - f.xmin) + (f.ymax - f.ymin);
    for (auto& c : f.cones) {
        auto [r1, r2] = edge_rays(c.gens);
        for (auto& r : {r1, r2}) {
            o << "<line x1=\"" << px(c.apex[0]) << "\" y1=\"" << py(c.apex[1]) << "\" x2=\"" << px(c.apex[0] + far * r[0]) << "\" y2=\""
              << py(c.apex[1] + far * r[1]) << "\" stroke=\"" << c.color << "\" stroke-width=\"2\"/>\n";
            if (r1 == r2) break;
        }
        o << "<circle cx=\"" << px(c.apex[0]) << "\" cy=\"" << py(c.apex[1]) << "\" r=\"5\" fill=\"" << c.color << "\"/>\n";
        o << "<text x=\"" << px(c.apex[0]) + 7 << "\" y=\"" << py(c.apex[1]) - 7 << "\" font-size=\"12\" fill=\"" << c.color << "\">" << c.label
          << " (" << c.apex[0] << "," << c.apex[1] << ")</text>\n";
    }
    o << "</g>\n";
    o << "<text x=\"8\" y=\"" << H + 26 << "\" font-size=\"14\">" << f.title << "</text>\n";
    o << "</svg>\n";
    return o.str();
}

inline std::string triple_str(const Triple& t) {
    return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

// Cone figures in the (x,y) plane. Names: g2-regular, g2-wall-1, g2-wall-2, pu21-regular, pu21-wall-1, pu21-wall-2, empty.
inline Figure cone_figure(const std::string& name, const Triple& abc = {2, 1, -3}, std::int64_t a = 1) {
    Figure f;
    std::vector<std::pair<AqCase, std::string>> cs;
    auto [p, q, r] = abc;
    const char* red = "#d62728";
    const char* green = "#2ca02c";
    const char* blue = "#1f77b4";
    if (name == "empty") {
        f.title = "lattice";
        return f;
    }
    if (name == "g2-regular") {
        f.title = "G2 K-type cones, (a,b,c) = " + triple_str(abc);
        cs = {{{AqGroup::G2, "I", {p, q, r}}, red}, {{AqGroup::G2, "II", {-r, -q, -p}}, green}, {{AqGroup::G2, "III", {q, p, r}}, blue}};
    } else if (name == "g2-wall-1") {
        f.title = "G2 walls Ia, Ib, a = " + std::to_string(a);
        for (auto id : {"Ia.1", "Ia.2", "Ia.3"}) cs.push_back({{AqGroup::G2, id, {a, a, -2 * a}}, red});
        cs.push_back({{AqGroup::G2, "Ib", {2 * a, -a, -a}}, blue});
    } else if (name == "g2-wall-2") {
        f.title = "G2 walls IIa, IIb, a = " + std::to_string(a);
        for (auto id : {"IIa.1", "IIa.2", "IIa.3"}) cs.push_back({{AqGroup::G2, id, {a, 0, -a}}, green});
        cs.push_back({{AqGroup::G2, "IIb", {0, a, -a}}, blue});
    } else if (name == "pu21-regular") {
        f.title = "PU(2,1) K-type cones, (a,b,c) = " + triple_str(abc);
        cs = {{{AqGroup::PU21, "I", {p, q, r}}, red}, {{AqGroup::PU21, "II", {p, r, q}}, blue}, {{AqGroup::PU21, "III", {q, p, r}}, green}};
    } else if (name == "pu21-wall-1") {
        f.title = "PU(2,1) walls Ia, Ib, a = " + std::to_string(a);
        for (auto id : {"Ia.1", "Ia.2", "Ia.3"}) cs.push_back({{AqGroup::PU21, id, {a, a, -2 * a}}, red});
        cs.push_back({{AqGroup::PU21, "Ib", {a, -2 * a, a}}, blue});
    } else if (name == "pu21-wall-2") {
        // b = -a < 0
        f.title = "PU(2,1) walls IIa, IIb, b = " + std::to_string(-a);
        for (auto id : {"IIa.1", "IIa.2", "IIa.3"}) cs.push_back({{AqGroup::PU21, id, {2 * a, -a, -a}}, green});
        cs.push_back({{AqGroup::PU21, "IIb", {-a, 2 * a, -a}}, blue});
    } else {
        throw DomainError("unknown figure: " + name);
    }
    for (auto& [c, col] : cs) f.cones.push_back(cone_of(aq_data(c), col));
    return f;
}

// Bars of K-type counts per SU_0(2) weight.
inline std::string emit_histogram(const KTypeLedger& L) {
    const std::int64_t W = 640, H = 400, pad = 40;
    std::vector<std::pair<std::int64_t, std::int64_t>> bars;
    std::int64_t top = 1;
    for (auto& l : L.levels) {
        std::int64_t n = 0;
        for (auto& [hw, k] : l.tau.terms) n += k;
        bars.push_back({l.su0, n});
        top = std::max(top, n);
    }
    std::int64_t slot = bars.empty() ? 0 : (W - 2 * pad) / static_cast<std::int64_t>(bars.size());
    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    o << "<rect x=\"0\" y=\"0\" width=\"" << W << "\" height=\"" << H << "\" fill=\"white\" stroke=\"black\"/>\n";
    o << "<line x1=\"" << pad << "\" y1=\"" << H - pad << "\" x2=\"" << W - pad << "\" y2=\"" << H - pad << "\" stroke=\"black\"/>\n";
    for (std::size_t i = 0; i < bars.size(); ++i) {
        auto [w, n] = bars[i];
        std::int64_t h = n * (H - 2 * pad - 20) / top;
        std::int64_t x = pad + static_cast<std::int64_t>(i) * slot;
        o << "<rect x=\"" << x + 2 << "\" y=\"" << H - pad - h << "\" width=\"" << std::max<std::int64_t>(slot - 4, 1) << "\" height=\"" << h
          << "\" fill=\"#1f77b4\"/>\n";
        o << "<text x=\"" << x + slot / 2 << "\" y=\"" << H - pad + 16 << "\" font-size=\"11\" text-anchor=\"middle\">" << w << "</text>\n";
        o << "<text x=\"" << x + slot / 2 << "\" y=\"" << H - pad - h - 4 << "\" font-size=\"11\" text-anchor=\"middle\">" << n << "</text>\n";
    }
    o << "<text x=\"" << pad << "\" y=\"24\" font-size=\"14\">K-types per SU_0(2) weight, " << L.module.G << " s=" << L.module.s << "</text>\n";
    o << "</svg>\n";
    return o.str();
}

}  // namespace quatheta::svg
