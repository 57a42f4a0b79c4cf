#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "vpg/geometry.hpp"
#include "vpg/representation.hpp"
#include "vpg/subsets.hpp"

namespace vpg {

struct RenderOptions {
    Rational scale = 40;  // pixels per unit
    Rational margin = 20;
    Rational clique_width = 2;
    Rational independent_width = make_rational(3, 2);
    Rational probe_width = 5;
};

inline std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

// Paths labelled "{...}" are independent vertices and are drawn dashed.
inline std::string render_svg(const VpgRepresentation& R, const RenderOptions& opt = {},
                              const std::vector<Segment>& probes = {}) {
    if (opt.scale <= 0) throw ParameterError("render scale must be positive");
    Rational x0 = 0, y0 = 0, x1 = 0, y1 = 0;
    bool first = true;
    auto grow = [&](const Point& p) {
        if (first) {
            x0 = x1 = p.x;
            y0 = y1 = p.y;
            first = false;
        }
        if (p.x < x0) x0 = p.x;
        if (p.x > x1) x1 = p.x;
        if (p.y < y0) y0 = p.y;
        if (p.y > y1) y1 = p.y;
    };
    for (const auto& [l, p] : R.entries())
        for (const auto& c : p.corners()) grow(c);
    for (const auto& s : probes) {
        grow(s.a());
        grow(s.b());
    }
    auto sx = [&](const Rational& x) { return to_decimal((x - x0) * opt.scale + opt.margin); };
    auto sy = [&](const Rational& y) { return to_decimal((y1 - y) * opt.scale + opt.margin); };
    const Rational w = (x1 - x0) * opt.scale + 2 * opt.margin;
    const Rational h = (y1 - y0) * opt.scale + 2 * opt.margin;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << to_decimal(w) << "\" height=\""
       << to_decimal(h) << "\" viewBox=\"0 0 " << to_decimal(w) << ' ' << to_decimal(h) << "\">\n";
    for (const auto& s : probes)
        os << "  <line class=\"probe\" x1=\"" << sx(s.a().x) << "\" y1=\"" << sy(s.a().y) << "\" x2=\"" << sx(s.b().x)
           << "\" y2=\"" << sy(s.b().y) << "\" stroke=\"#999999\" stroke-width=\"" << to_decimal(opt.probe_width)
           << "\" stroke-linecap=\"round\"/>\n";
    for (const auto& [l, p] : R.entries()) {
        const bool indep = is_subset_label(l);
        os << "  <polyline class=\"" << (indep ? "independent" : "clique") << "\" data-label=\"" << xml_escape(l)
           << "\" fill=\"none\" stroke=\"" << (indep ? "#c0392b" : "#000000") << "\" stroke-width=\""
           << to_decimal(indep ? opt.independent_width : opt.clique_width) << '"'
           << (indep ? " stroke-dasharray=\"4 2\"" : "") << " points=\"";
        for (std::size_t i = 0; i < p.corners().size(); ++i)
            os << (i ? " " : "") << sx(p.corners()[i].x) << ',' << sy(p.corners()[i].y);
        os << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace vpg
