#include "mt/render.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

namespace mt {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

struct layout {
  const merge_tree* t;
  double x_off, y_base, y_scale, stub_top, width;
  std::map<node_id, double> x;

  layout(const merge_tree& tree, double off, double base, double scale, double stub)
      : t(&tree), x_off(off), y_base(base), y_scale(scale), stub_top(stub) {
    double next_leaf = 0;
    const auto& order = tree.finite_vertices();
    // children are placed before parents in reverse DFS order
    for (auto it = order.rbegin(); it != order.rend(); ++it)
      if (tree.children_of(*it).empty()) {
        x[*it] = next_leaf;
        next_leaf += 60.0;
      }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const auto& ch = tree.children_of(*it);
      if (!ch.empty()) {
        double s = 0;
        for (node_id c : ch) s += x[c];
        x[*it] = s / static_cast<double>(ch.size());
      }
    }
    width = next_leaf > 0 ? next_leaf - 60.0 : 0.0;
  }

  double xpos(node_id v) const { return x_off + x.at(v); }
  double ypos(const height& h) const {
    if (h.is_infinite()) return stub_top;
    return y_base - y_scale * h.value().get_d();
  }
  double px(const point& p) const { return xpos(p.carrier); }
  double py(const point& p) const { return ypos(p.h); }
};

void draw_tree(std::ostringstream& svg, const layout& L) {
  const merge_tree& t = *L.t;
  for (node_id v : t.finite_vertices()) {
    node_id p = *t.parent_of(v);
    double x0 = L.xpos(v), y0 = L.ypos(t.height_of(v));
    if (p == t.root()) {
      svg << "<path d=\"M " << num(x0) << " " << num(y0) << " L " << num(x0) << " "
          << num(L.stub_top) << "\" stroke=\"#444\" stroke-dasharray=\"4 3\" fill=\"none\"/>\n";
    } else {
      double x1 = L.xpos(p), y1 = L.ypos(t.height_of(p));
      svg << "<path d=\"M " << num(x0) << " " << num(y0) << " L " << num(x0) << " " << num(y1)
          << " L " << num(x1) << " " << num(y1) << "\" stroke=\"#444\" fill=\"none\"/>\n";
    }
    svg << "<circle cx=\"" << num(x0) << "\" cy=\"" << num(y0) << "\" r=\"3\" fill=\"#222\"/>\n"
        << "<text x=\"" << num(x0 + 5) << "\" y=\"" << num(y0 + 12)
        << "\" font-size=\"10\" fill=\"#666\">" << v << "@" << t.height_of(v).str()
        << "</text>\n";
  }
}

// The fan arm of a constraint arrow: every point above src up to the target height.
void draw_fan(std::ostringstream& svg, const layout& L, const point& src, const height& top) {
  const merge_tree& t = *L.t;
  std::ostringstream path;
  path << "M " << num(L.px(src)) << " " << num(L.py(src));
  node_id c = src.carrier;
  while (true) {
    const height& upper = t.edge_top(c);
    if (top < upper) {
      path << " L " << num(L.xpos(c)) << " " << num(L.ypos(top));
      break;
    }
    path << " L " << num(L.xpos(c)) << " "
         << num(upper.is_infinite() ? L.stub_top : L.ypos(upper));
    node_id p = *t.parent_of(c);
    if (p == t.root()) break;
    path << " L " << num(L.xpos(p)) << " " << num(L.ypos(t.height_of(p)));
    c = p;
  }
  svg << "<path d=\"" << path.str()
      << "\" stroke=\"#e5b84b\" stroke-width=\"9\" stroke-opacity=\"0.35\" fill=\"none\" "
         "stroke-linejoin=\"round\"/>\n";
}

void draw_arrow(std::ostringstream& svg, const layout& from, const layout& to, const arrow& a,
                const char* color) {
  double x0 = from.px(a.src), y0 = from.py(a.src);
  double x1 = a.tgt.is_root() ? to.x_off + to.width / 2 : to.px(a.tgt);
  double y1 = a.tgt.is_root() ? to.stub_top : to.py(a.tgt);
  double mx = (x0 + x1) / 2, my = std::min(y0, y1) - 14;
  svg << "<path d=\"M " << num(x0) << " " << num(y0) << " Q " << num(mx) << " " << num(my) << " "
      << num(x1) << " " << num(y1) << "\" stroke=\"" << color
      << "\" fill=\"none\" marker-end=\"url(#tip)\" opacity=\"0.8\"/>\n";
}

}  // namespace

std::string render_svg(const tree_pair& tp, const anchored_interleaving* interleaving,
                       const partial_interleaving* constraints) {
  const double scale = 28.0, margin = 40.0, gap = 100.0;
  double hmax = 0;
  for (const merge_tree* t : {tp.t1, tp.t2})
    for (node_id v : t->finite_vertices())
      hmax = std::max(hmax, t->height_of(v).value().get_d());
  const double stub_top = margin;
  const double y_base = margin + scale * (hmax + 1.5);

  layout l1(*tp.t1, margin, y_base, scale, stub_top);
  layout l2(*tp.t2, margin + l1.width + gap, y_base, scale, stub_top);
  const double total_w = l2.x_off + l2.width + margin;
  const double total_h = y_base + margin;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(total_w) << "\" height=\""
      << num(total_h) << "\" viewBox=\"0 0 " << num(total_w) << " " << num(total_h) << "\">\n"
      << "<defs><marker id=\"tip\" markerWidth=\"7\" markerHeight=\"7\" refX=\"5\" refY=\"2.5\" "
         "orient=\"auto\"><path d=\"M 0 0 L 5 2.5 L 0 5 z\" fill=\"context-stroke\"/>"
         "</marker></defs>\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (constraints) {
    for (const auto& a : constraints->fwd.arrows) draw_fan(svg, l1, a.src, a.tgt.h);
    for (const auto& a : constraints->bwd.arrows) draw_fan(svg, l2, a.src, a.tgt.h);
  }
  draw_tree(svg, l1);
  draw_tree(svg, l2);
  if (interleaving) {
    for (const auto& a : interleaving->fwd.arrows) draw_arrow(svg, l1, l2, a, "#4477aa");
    for (const auto& a : interleaving->bwd.arrows) draw_arrow(svg, l2, l1, a, "#cc6644");
  }
  if (constraints) {
    for (const auto& a : constraints->fwd.arrows) draw_arrow(svg, l1, l2, a, "#997711");
    for (const auto& a : constraints->bwd.arrows) draw_arrow(svg, l2, l1, a, "#997711");
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace mt
