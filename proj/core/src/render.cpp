#include <algorithm>
#include <map>
#include <sstream>

#include "mckay/io.hpp"

namespace mckay {

namespace {

std::string degree_string(long d) { return d > 0 ? "+" + std::to_string(d) : std::to_string(d); }

std::string period_string(const Rational& p) {
  if (is_integer(p)) return rat_num(p).str();
  return rat_num(p).str() + "/" + rat_den(p).str();
}

}  // namespace

Diagram make_diagram(const McKayReport& report, PageKind kind) {
  require(report.floer_enabled, ErrorKind::NotIsolated,
          "diagram pages need the Reeb-orbit pipeline (free action off 0)");
  Diagram d;
  d.kind = kind;
  if (kind == PageKind::Sc) {
    d.constants_column = true;
    for (std::size_t k = report.betti.size(); k-- > 0;) {
      for (std::uint64_t i = 0; i < report.betti[k]; ++i)
        d.constants_degrees.push_back(2 * static_cast<long>(k));
    }
  }
  for (const MorseBottOrbit& orbit : report.catalog) {
    DiagramColumn col;
    col.class_label = "C" + std::to_string(orbit.class_index);
    col.period = orbit.period;
    if (kind == PageKind::EscPlus) {
      for (int j = orbit.dim_v; j-- > 0;) col.degrees.push_back(orbit.mu + 1 + 2 * j);
    } else {
      col.degrees.push_back(orbit.mu_max);
      col.degrees.push_back(orbit.mu);
    }
    d.columns.push_back(std::move(col));
  }
  return d;
}

std::string render_ascii(const Diagram& diagram) {
  // one fixed-width column per orbit family, degrees descending top to
  // bottom; the constants column is bracketed, as in (4) (2) (0)
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> headers;
  if (diagram.constants_column) {
    headers.push_back("const");
    std::vector<std::string> col;
    for (long d : diagram.constants_degrees) col.push_back("(" + std::to_string(d) + ")");
    cells.push_back(std::move(col));
  }
  for (const DiagramColumn& c : diagram.columns) {
    headers.push_back(c.class_label + ":" + period_string(c.period));
    std::vector<std::string> col;
    for (long d : c.degrees) col.push_back(degree_string(d));
    cells.push_back(std::move(col));
  }
  std::vector<std::size_t> widths(headers.size());
  std::size_t rows = 0;
  for (std::size_t i = 0; i < headers.size(); ++i) {
    widths[i] = headers[i].size();
    for (const std::string& s : cells[i]) widths[i] = std::max(widths[i], s.size());
    rows = std::max(rows, cells[i].size());
  }
  std::ostringstream out;
  auto pad = [&](const std::string& s, std::size_t w) {
    out << s << std::string(w - s.size() + 2, ' ');
  };
  for (std::size_t i = 0; i < headers.size(); ++i) pad(headers[i], widths[i]);
  out << "\n";
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t i = 0; i < headers.size(); ++i)
      pad(r < cells[i].size() ? cells[i][r] : "", widths[i]);
    out << "\n";
  }
  return out.str();
}

std::string render_svg(const Diagram& diagram) {
  long deg_max = 0, deg_min = 0;
  bool any = false;
  auto see = [&](long d) {
    if (!any) {
      deg_max = deg_min = d;
      any = true;
    }
    deg_max = std::max(deg_max, d);
    deg_min = std::min(deg_min, d);
  };
  for (long d : diagram.constants_degrees) see(d);
  for (const DiagramColumn& c : diagram.columns)
    for (long d : c.degrees) see(d);
  if (!any) deg_max = deg_min = 0;

  const int col_width = 56, row_height = 22, margin_x = 20, margin_y = 40;
  auto x_of = [&](std::size_t col) {
    return margin_x + static_cast<int>(col) * col_width + col_width / 2;
  };
  auto y_of = [&](long degree) {
    return margin_y + static_cast<int>(deg_max - degree) * row_height;
  };
  std::size_t total_columns = diagram.columns.size() + (diagram.constants_column ? 1 : 0);
  int width = margin_x * 2 + static_cast<int>(total_columns) * col_width;
  int height = margin_y + static_cast<int>(deg_max - deg_min + 1) * row_height + 20;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" font-family=\"monospace\" font-size=\"13\">\n";
  std::size_t col = 0;
  auto header = [&](std::size_t c, const std::string& text) {
    svg << "  <text x=\"" << x_of(c) << "\" y=\"20\" text-anchor=\"middle\">" << text
        << "</text>\n";
  };
  if (diagram.constants_column) {
    header(col, "const");
    std::map<long, int> seen;
    for (long d : diagram.constants_degrees) {
      svg << "  <text x=\"" << x_of(col) + 14 * seen[d]++ << "\" y=\"" << y_of(d)
          << "\" text-anchor=\"middle\">(" << d << ")</text>\n";
    }
    ++col;
  }
  for (const DiagramColumn& c : diagram.columns) {
    header(col, c.class_label + ":" + period_string(c.period));
    for (long d : c.degrees)
      svg << "  <text x=\"" << x_of(col) << "\" y=\"" << y_of(d)
          << "\" text-anchor=\"middle\">" << degree_string(d) << "</text>\n";
    ++col;
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace mckay
