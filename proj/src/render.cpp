#include "hiveflow/render.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace hiveflow {

namespace {

constexpr double kSide = 30.0;
constexpr double kRowH = 25.980762113533160; // kSide * sqrt(3) / 2
constexpr double kMargin = 30.0;

struct Pt {
  double x, y;
};

std::string fmt2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

} // namespace

std::string render_flow_svg(const Lattice& L, const FlowClass& f) {
  int n = L.n;
  double w = kSide * n + 2 * kMargin;
  double h = kRowH * n + 2 * kMargin;
  std::vector<Pt> at(L.nvert);
  for (int r = 0; r <= n; ++r)
    for (int p = 0; p <= n - r; ++p)
      at[L.vertex_id(r, p)] = {kMargin + kSide * p + kSide / 2 * r, h - kMargin - kRowH * r};

  auto centroid = [&](int32_t ti) {
    const Triangle& t = L.tris[ti];
    int32_t a = L.edges[t.side[0]].v0, b = L.edges[t.side[0]].v1;
    int32_t c = L.edges[t.side[1]].v0;
    if (c == a || c == b) c = L.edges[t.side[1]].v1;
    return Pt{(at[a].x + at[b].x + at[c].x) / 3, (at[a].y + at[b].y + at[c].y) / 3};
  };

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt2(w) + "\" height=\"" + fmt2(h) +
       "\" viewBox=\"0 0 " + fmt2(w) + " " + fmt2(h) + "\">\n";
  s += "<style>line{stroke:#555;stroke-width:1}line.thick{stroke:#000;stroke-width:3.5}"
       "text{font:8px monospace;text-anchor:middle;dominant-baseline:middle;fill:#000}"
       "polygon{fill:#c02020}circle{fill:#333}</style>\n";

  for (const Edge& e : L.edges) {
    bool thick = e.diag_of >= 0 && slack(L, f, L.rhombi[e.diag_of]) > 0;
    s += "<line x1=\"" + fmt2(at[e.v0].x) + "\" y1=\"" + fmt2(at[e.v0].y) + "\" x2=\"" +
         fmt2(at[e.v1].x) + "\" y2=\"" + fmt2(at[e.v1].y) + "\"" +
         (thick ? std::string(" class=\"thick\"") : std::string()) + "/>\n";
  }

  for (int32_t ei = 0; ei < L.nedge; ++ei) {
    const Edge& e = L.edges[ei];
    int64_t d = f.delta[ei];
    Pt mid{(at[e.v0].x + at[e.v1].x) / 2, (at[e.v0].y + at[e.v1].y) / 2};
    Pt c = centroid(e.up_tri);
    double ux = c.x - mid.x, uy = c.y - mid.y;
    double len = std::sqrt(ux * ux + uy * uy);
    ux /= len, uy /= len; // unit vector from the edge into its up triangle
    if (d < 0) ux = -ux, uy = -uy;
    double ax = at[e.v1].x - at[e.v0].x, ay = at[e.v1].y - at[e.v0].y;
    double alen = std::sqrt(ax * ax + ay * ay);
    ax /= alen, ay /= alen;
    if (d != 0) {
      Pt tip{mid.x + 5 * ux, mid.y + 5 * uy};
      Pt b1{mid.x - 2 * ux + 3 * ax, mid.y - 2 * uy + 3 * ay};
      Pt b2{mid.x - 2 * ux - 3 * ax, mid.y - 2 * uy - 3 * ay};
      s += "<polygon points=\"" + fmt2(tip.x) + "," + fmt2(tip.y) + " " + fmt2(b1.x) + "," +
           fmt2(b1.y) + " " + fmt2(b2.x) + "," + fmt2(b2.y) + "\"/>\n";
    }
    Pt lp{mid.x + 11 * ux, mid.y + 11 * uy};
    int64_t mag = d < 0 ? -d : d;
    s += "<text x=\"" + fmt2(lp.x) + "\" y=\"" + fmt2(lp.y) + "\">" + std::to_string(mag) +
         "</text>\n";
  }

  for (int32_t v = 0; v < L.nvert; ++v)
    s += "<circle cx=\"" + fmt2(at[v].x) + "\" cy=\"" + fmt2(at[v].y) + "\" r=\"2\"/>\n";
  s += "</svg>\n";
  return s;
}

} // namespace hiveflow
