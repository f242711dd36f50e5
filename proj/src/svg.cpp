#include "hds/svg.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace hds {

namespace {

struct Pt {
    double x, y;
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

std::string esc(const std::string& s) {
    std::string o;
    for (char c : s) {
        if (c == '<') o += "&lt;";
        else if (c == '>') o += "&gt;";
        else if (c == '&') o += "&amp;";
        else if (c == '"') o += "&quot;";
        else o += c;
    }
    return o;
}

} // namespace

std::string render_svg(const Surface& S, const std::vector<RenderInput>& collections, int max_strands) {
    const Triangulation& T = *S.T;
    const int nt = T.num_triangles(), cols = std::min(nt, 6);
    const double side = 180, h = side * std::sqrt(3.0) / 2, gap = 30, margin = 40;
    const int rows = (nt + cols - 1) / cols;
    const double W = margin * 2 + cols * (side + gap), H = margin * 2 + rows * (h + gap) + 20 * collections.size();

    std::vector<std::array<Pt, 3>> corners(nt);
    for (int t = 0; t < nt; ++t) {
        double x0 = margin + (t % cols) * (side + gap), y0 = margin + (t / cols) * (h + gap);
        corners[t] = {Pt{x0, y0 + h}, Pt{x0 + side, y0 + h}, Pt{x0 + side / 2, y0}};
    }
    auto side_of = [&](int t, Label l) {
        for (int i = 0; i < 3; ++i)
            if (T.triangles()[t][i] == l) return i;
        return -1;
    };
    // point at position p (1-based from the tail) of w strands on side i of triangle t
    auto at = [&](int t, int i, double frac) {
        Pt a = corners[t][i], b = corners[t][(i + 1) % 3];
        return Pt{a.x + frac * (b.x - a.x), a.y + frac * (b.y - a.y)};
    };

    std::ostringstream o;
    o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(W) << "\" height=\"" << num(H) << "\" viewBox=\"0 0 " << num(W) << " " << num(H)
      << "\">\n";
    o << "<title>genus " << S.genus() << ", " << S.ms.marked << " marked points (" << model_name(S.model) << " model)</title>\n";
    o << "<g id=\"complex\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\">\n";
    for (int t = 0; t < nt; ++t) {
        const auto& c = corners[t];
        o << "<polygon points=\"" << num(c[0].x) << "," << num(c[0].y) << " " << num(c[1].x) << "," << num(c[1].y) << " " << num(c[2].x) << "," << num(c[2].y) << "\"/>\n";
    }
    o << "</g>\n<g id=\"edge-labels\" font-family=\"monospace\" font-size=\"11\" fill=\"#555555\">\n";
    for (int t = 0; t < nt; ++t)
        for (int i = 0; i < 3; ++i) {
            Pt m = at(t, i, 0.5);
            Pt cen{(corners[t][0].x + corners[t][1].x + corners[t][2].x) / 3, (corners[t][0].y + corners[t][1].y + corners[t][2].y) / 3};
            Pt p{m.x + 0.15 * (cen.x - m.x), m.y + 0.15 * (cen.y - m.y)};
            Label l = T.triangles()[t][i];
            o << "<text x=\"" << num(p.x) << "\" y=\"" << num(p.y) << "\" text-anchor=\"middle\">" << (l >= 0 ? std::to_string(l) : "~" + std::to_string(~l)) << "</text>\n";
        }
    o << "</g>\n<g id=\"points\" font-family=\"monospace\" font-size=\"12\">\n";
    for (int t = 0; t < nt; ++t)
        for (int i = 0; i < 3; ++i) {
            // vertex i of the drawing is the tail of side i
            int tag = T.tag_of(T.triangles()[t][i]);
            const Pt& p = corners[t][i];
            o << "<circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\"4\" fill=\"" << (tag > 0 ? "#000000" : "#bbbbbb") << "\"/>\n";
            if (tag > 0) o << "<text x=\"" << num(p.x + 6) << "\" y=\"" << num(p.y - 6) << "\">" << tag << "</text>\n";
        }
    o << "</g>\n";

    for (std::size_t ci = 0; ci < collections.size(); ++ci) {
        const auto& col = collections[ci];
        const char* colour = kPalette[ci % (sizeof kPalette / sizeof *kPalette)];
        o << "<g id=\"collection-" << ci << "\" fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\">\n";
        for (std::size_t k = 0; k < col.curves.size(); ++k) {
            TracedCurve tc = trace(col.curves[k]);
            for (const auto& b : tc.bundles) {
                int si = side_of(b.triangle, b.from), sj = side_of(b.triangle, b.to);
                double wa = col.curves[k](b.from).get_d(), wb = col.curves[k](b.to).get_d();
                Pt v = corners[b.triangle][(si + 1) % 3]; // shared corner
                const long m = b.weight.fits_slong_p() ? b.weight.get_si() : max_strands + 1;
                const double total = b.weight.get_d();
                std::ostringstream d;
                int drawn = (int)std::min<long>(m, max_strands);
                for (int s = 0; s < drawn; ++s) {
                    double q = drawn == 1 ? 0 : s * (total - 1) / (drawn - 1); // strand index counted from the corner
                    Pt a = at(b.triangle, si, (wa - q) / (wa + 1));
                    Pt c = at(b.triangle, sj, (1 + q) / (wb + 1));
                    Pt ctl{(a.x + c.x) / 2 + 0.35 * (v.x - (a.x + c.x) / 2), (a.y + c.y) / 2 + 0.35 * (v.y - (a.y + c.y) / 2)};
                    d << "M" << num(a.x) << " " << num(a.y) << " Q" << num(ctl.x) << " " << num(ctl.y) << " " << num(c.x) << " " << num(c.y) << " ";
                }
                std::string ds = d.str();
                ds.pop_back();
                o << "<path data-curve=\"" << k << "\" data-weight=\"" << dec(b.weight) << "\" d=\"" << ds << "\"/>\n";
            }
        }
        o << "</g>\n";
        o << "<text x=\"" << num(margin) << "\" y=\"" << num(H - margin / 2 - 20 * (collections.size() - 1 - ci)) << "\" font-family=\"monospace\" font-size=\"12\" fill=\""
          << colour << "\">" << esc(col.name) << " (" << col.curves.size() << " curves)</text>\n";
    }
    o << "</svg>\n";
    return o.str();
}

} // namespace hds
