#include "loopbraid/render.hpp"

#include <sstream>

namespace loopbraid {

std::string render_ascii(const BraidWord& w) {
  const int n = w.strands();
  const std::size_t width = static_cast<std::size_t>(2 * n - 1);
  auto column = [](int strand) { return static_cast<std::size_t>(2 * (strand - 1)); };
  auto plain = [&] {
    std::string row(width, ' ');
    for (int s = 1; s <= n; ++s) row[column(s)] = '|';
    return row;
  };

  std::ostringstream out;
  out << plain() << '\n';
  for (const Token& token : w.tokens()) {
    std::string top = plain();
    std::string mid = plain();
    std::string bottom = plain();
    if (token.kind == TokenKind::Tau) {
      mid[column(token.index)] = '*';
    } else {
      const std::size_t left = column(token.index);
      const std::size_t right = column(token.index + 1);
      top[left] = '\\';
      top[right] = '/';
      mid[left] = ' ';
      mid[right] = ' ';
      bottom[left] = '/';
      bottom[right] = '\\';
      switch (token.kind) {
        case TokenKind::SigmaPos: mid[left + 1] = '/'; break;   // strand from the right passes over
        case TokenKind::SigmaNeg: mid[left + 1] = '\\'; break;  // strand from the left passes over
        default: mid[left + 1] = 'o'; break;
      }
    }
    out << top << "   " << format(token) << '\n' << mid << '\n' << bottom << '\n';
  }
  out << plain() << '\n';
  return out.str();
}

std::string render_svg(const BraidWord& w) {
  constexpr int kGap = 40;
  constexpr int kRow = 50;
  const int n = w.strands();
  const int width = kGap * (n + 1);
  const int height = kRow * (static_cast<int>(w.length()) + 1);
  auto x = [&](int position) { return kGap * position; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<g stroke=\"black\" stroke-width=\"2\" fill=\"none\">\n";
  auto line = [&](double x1, double y1, double x2, double y2) {
    out << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2 << "\"/>\n";
  };

  int y = kRow / 2;
  for (int p = 1; p <= n; ++p) line(x(p), 0, x(p), y);
  for (const Token& token : w.tokens()) {
    const int y2 = y + kRow;
    for (int p = 1; p <= n; ++p) {
      const bool involved = token.kind == TokenKind::Tau ? false : (p == token.index || p == token.index + 1);
      if (!involved) line(x(p), y, x(p), y2);
    }
    if (token.kind == TokenKind::Tau) {
      out << "<circle cx=\"" << x(token.index) << "\" cy=\"" << (y + kRow / 2)
          << "\" r=\"5\" fill=\"black\"/>\n";
    } else {
      const double l = x(token.index);
      const double r = x(token.index + 1);
      const double cx = (l + r) / 2;
      const double cy = y + kRow / 2.0;
      // Over-strand drawn whole; under-strand drawn with a gap around the crossing.
      const bool right_over = token.kind == TokenKind::SigmaPos;
      const double ox1 = right_over ? r : l;
      const double ox2 = right_over ? l : r;
      line(ox1, y, ox2, y2);
      const double ux1 = right_over ? l : r;
      const double ux2 = right_over ? r : l;
      if (token.kind == TokenKind::Rho) {
        line(ux1, y, ux2, y2);
        out << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"6\"/>\n";
      } else {
        const double t = 0.35;
        line(ux1, y, ux1 + (cx - ux1) * (1 - t), y + (cy - y) * (1 - t));
        line(ux2 + (cx - ux2) * (1 - t), y2 - (y2 - cy) * (1 - t), ux2, y2);
      }
    }
    y = y2;
  }
  for (int p = 1; p <= n; ++p) line(x(p), y, x(p), height);
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace loopbraid
