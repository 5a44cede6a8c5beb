#include "n2s/bench/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace n2s::bench {
namespace {

constexpr double kSize = 600.0;
constexpr double kMargin = 40.0;
constexpr double kTitle = 30.0;

std::string node_label(const Instance& inst, int node) {
  if (node == 0) return "0";
  const int r = inst.request_of(node);
  return std::to_string(r) + (inst.is_pickup(node) ? "+" : "-");
}

std::string format(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
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

}  // namespace

void require_feasible(const Instance& instance, const Route& route, Variant variant) {
  if (route.size() != instance.num_nodes()) {
    throw std::invalid_argument("route visits " + std::to_string(route.size()) +
                                " nodes, instance has " + std::to_string(instance.num_nodes()));
  }
  if (variant == Variant::kPdtspLifo) {
    const StackTrace trace = lifo_stack_trace(route);
    if (trace.ok()) return;
    const int pos = *trace.violation_position;
    const int node = route.at(pos);
    const bool lifo = trace.kind == ViolationKind::kLifo;
    std::string what = "route infeasible under pdtsp-lifo at position " + std::to_string(pos) +
                       " (node " + node_label(instance, node) + "): ";
    if (lifo && !trace.stacks.empty() && pos > 0 && !trace.stacks[pos - 1].empty()) {
      what += "blocked by " + std::to_string(trace.stacks[pos - 1].back()) + "+";
    } else {
      what += "delivery before its pickup";
    }
    throw InfeasibleRouteError(what, pos, trace.kind);
  }
  for (int pos = 0; pos < route.size(); ++pos) {
    const int node = route.at(pos);
    if (instance.is_delivery(node) &&
        route.position(instance.pickup(instance.request_of(node))) > pos) {
      throw InfeasibleRouteError("route infeasible under pdtsp at position " + std::to_string(pos) +
                                     " (node " + node_label(instance, node) +
                                     "): delivery before its pickup",
                                 pos, ViolationKind::kPrecedence);
    }
  }
}

std::string render_svg(const Instance& instance, const Route& route, const std::string& title) {
  const auto& pts = instance.coords();
  double lo_x = pts[0].x, hi_x = pts[0].x, lo_y = pts[0].y, hi_y = pts[0].y;
  for (const Point& p : pts) {
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  }
  const double extent = std::max({hi_x - lo_x, hi_y - lo_y, 1e-12});
  const double span = kSize - 2 * kMargin;
  auto sx = [&](const Point& p) { return kMargin + (p.x - lo_x) / extent * span; };
  // SVG y grows downwards.
  auto sy = [&](const Point& p) { return kTitle + kMargin + (hi_y - p.y) / extent * span; };

  std::ostringstream svg;
  svg << format("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
                "viewBox=\"0 0 %.0f %.0f\">\n",
                kSize, kSize + kTitle, kSize, kSize + kTitle);
  svg << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" "
         "markerWidth=\"7\" markerHeight=\"7\" orient=\"auto-start-reverse\">"
         "<path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#555\"/></marker></defs>\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << format("<text x=\"%.1f\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\" "
                "text-anchor=\"middle\">%s</text>\n",
                kSize / 2, escape(title).c_str());

  const double r = 7.0;
  svg << "<g stroke=\"#555\" stroke-width=\"1.5\" marker-end=\"url(#arrow)\">\n";
  for (int t = 0; t < route.size(); ++t) {
    const Point& a = pts[route.at(t)];
    const Point& b = pts[route.at((t + 1) % route.size())];
    const double ax = sx(a), ay = sy(a), bx = sx(b), by = sy(b);
    const double len = std::hypot(bx - ax, by - ay);
    if (len <= 2 * r) continue;
    const double ux = (bx - ax) / len, uy = (by - ay) / len;
    svg << format("<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\"/>\n", ax + ux * r,
                  ay + uy * r, bx - ux * r, by - uy * r);
  }
  svg << "</g>\n";

  for (int v = 0; v < instance.num_nodes(); ++v) {
    const double x = sx(pts[v]), y = sy(pts[v]);
    if (v == 0) {
      svg << format("<rect x=\"%.2f\" y=\"%.2f\" width=\"%.1f\" height=\"%.1f\" fill=\"#222\"/>\n",
                    x - r, y - r, 2 * r, 2 * r);
    } else if (instance.is_pickup(v)) {
      svg << format("<circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.1f\" fill=\"#2b6cb0\"/>\n", x, y, r);
    } else {
      svg << format("<polygon points=\"%.2f,%.2f %.2f,%.2f %.2f,%.2f %.2f,%.2f\" "
                    "fill=\"#c53030\"/>\n",
                    x, y - r, x + r, y, x, y + r, x - r, y);
    }
    svg << format("<text x=\"%.2f\" y=\"%.2f\" font-family=\"sans-serif\" font-size=\"11\">%s"
                  "</text>\n",
                  x + r + 2, y - r, node_label(instance, v).c_str());
  }
  svg << "</svg>\n";
  return svg.str();
}

void plot_route(const Instance& instance, const Route& route, Variant variant,
                const std::filesystem::path& out_path, const std::string& title) {
  require_feasible(instance, route, variant);
  const std::string heading =
      (title.empty() ? std::string(to_string(variant)) : title) +
      format(" | n=%d | cost %.6f", instance.num_requests(), objective(instance, route));
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + out_path.string() + " for writing");
  out << render_svg(instance, route, heading);
  if (!out) throw std::runtime_error("failed writing " + out_path.string());
}

Route parse_route(const std::string& text) {
  std::istringstream in(text);
  std::vector<int> order;
  for (std::string token; in >> token;) {
    if (token == "," || token == "[" || token == "]") continue;
    std::size_t used = 0;
    int node = -1;
    try {
      node = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw std::invalid_argument("route: bad node id '" + token + "'");
    order.push_back(node);
  }
  return Route(std::move(order));
}

}  // namespace n2s::bench
