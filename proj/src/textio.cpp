#include "hjg/textio.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <stdexcept>

namespace hjg {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

[[noreturn]] void bad_literal(std::string_view text) {
  throw std::invalid_argument("not a decimal or rational literal: '" +
                              std::string(text) + "'");
}

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

// Base-10 value of a digit string.  The BigInt string constructor treats a
// leading '0' as an octal prefix, so strip the padding first.
BigInt parse_digits(std::string_view s) {
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  return BigInt(std::string(s));
}

}  // namespace

Rational parse_decimal_rational(std::string_view text) {
  std::string_view s = text;
  if (s.empty()) bad_literal(text);

  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    bool neg = false;
    if (!num.empty() && (num.front() == '+' || num.front() == '-')) {
      neg = num.front() == '-';
      num.remove_prefix(1);
    }
    if (!all_digits(num) || !all_digits(den)) bad_literal(text);
    const BigInt d = parse_digits(den);
    if (d == 0) bad_literal(text);
    BigInt n = parse_digits(num);
    if (neg) n = -n;
    return Rational(n, d);
  }

  bool neg = false;
  if (s.front() == '+' || s.front() == '-') {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string digits;
  long frac_len = 0;
  std::size_t pos = 0;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9')
    digits += s[pos++];
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
      digits += s[pos++];
      ++frac_len;
    }
  }
  if (digits.empty()) bad_literal(text);
  long exp10 = 0;
  if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
    std::string_view tail = s.substr(pos + 1);
    bool eneg = false;
    if (!tail.empty() && (tail.front() == '+' || tail.front() == '-')) {
      eneg = tail.front() == '-';
      tail.remove_prefix(1);
    }
    if (!all_digits(tail) || tail.size() > 6) bad_literal(text);
    const auto res =
        std::from_chars(tail.data(), tail.data() + tail.size(), exp10);
    if (res.ec != std::errc()) bad_literal(text);
    if (eneg) exp10 = -exp10;
    pos = s.size();
  }
  if (pos != s.size()) bad_literal(text);

  BigInt mant = parse_digits(digits);
  if (neg) mant = -mant;
  const long shift = exp10 - frac_len;
  const BigInt p10 =
      boost::multiprecision::pow(BigInt(10), unsigned(std::abs(shift)));
  return shift >= 0 ? Rational(mant * p10) : Rational(mant, p10);
}

void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  auto line = [&os](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) os << ',';
      os << cells[c];
    }
    os << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
}

namespace {

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

void write_sequence_plot(std::ostream& os,
                         const std::vector<SequenceRecord>& records) {
  struct Pt {
    double x, y;
  };
  // std::map keeps series in label order, independent of input order.
  std::map<std::string, std::vector<Pt>> series;
  const double ref = 1.0 / std::sqrt(2.0);
  double xmin = 1e300, xmax = -1e300, ymin = ref, ymax = ref;
  for (const SequenceRecord& r : records) {
    const double x = -std::log2(to_double(r.lambda));
    const double y = to_double(r.w.w_plus);
    series[r.seq].push_back({x, y});
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  if (records.empty()) {
    xmin = 0.0;
    xmax = 1.0;
  }
  const double xpad = std::max(0.5, 0.05 * (xmax - xmin));
  const double ypad = std::max(0.005, 0.08 * (ymax - ymin));
  xmin -= xpad;
  xmax += xpad;
  ymin -= ypad;
  ymax += ypad;

  const double W = 720, H = 460, L = 70, R = 20, T = 20, B = 45;
  auto sx = [&](double x) {
    return L + (x - xmin) / (xmax - xmin) * (W - L - R);
  };
  auto sy = [&](double y) {
    return H - B - (y - ymin) / (ymax - ymin) * (H - T - B);
  };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W
     << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << ' ' << H
     << "\">\n";
  os << "<rect width=\"" << W << "\" height=\"" << H
     << "\" fill=\"white\"/>\n";

  // axes box and ticks
  os << "<rect x=\"" << px(L) << "\" y=\"" << px(T) << "\" width=\""
     << px(W - L - R) << "\" height=\"" << px(H - T - B)
     << "\" fill=\"none\" stroke=\"#333\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double y = ymin + (ymax - ymin) * t / 4.0;
    os << "<line x1=\"" << px(L - 4) << "\" y1=\"" << px(sy(y)) << "\" x2=\""
       << px(L) << "\" y2=\"" << px(sy(y)) << "\" stroke=\"#333\"/>\n";
    char lab[32];
    std::snprintf(lab, sizeof lab, "%.4f", y);
    os << "<text x=\"" << px(L - 8) << "\" y=\"" << px(sy(y) + 4)
       << "\" text-anchor=\"end\" font-family=\"monospace\" "
          "font-size=\"11\">"
       << lab << "</text>\n";
  }
  const int x0 = int(std::ceil(xmin)), x1 = int(std::floor(xmax));
  for (int t = x0; t <= x1; ++t) {
    os << "<line x1=\"" << px(sx(t)) << "\" y1=\"" << px(H - B) << "\" x2=\""
       << px(sx(t)) << "\" y2=\"" << px(H - B + 4) << "\" stroke=\"#333\"/>\n";
    os << "<text x=\"" << px(sx(t)) << "\" y=\"" << px(H - B + 16)
       << "\" text-anchor=\"middle\" font-family=\"monospace\" "
          "font-size=\"11\">"
       << t << "</text>\n";
  }
  os << "<text x=\"" << px((L + W - R) / 2) << "\" y=\"" << px(H - 8)
     << "\" text-anchor=\"middle\" font-family=\"monospace\" "
        "font-size=\"12\">log2(1/lambda)</text>\n";
  os << "<text x=\"14\" y=\"" << px((T + H - B) / 2)
     << "\" text-anchor=\"middle\" font-family=\"monospace\" "
        "font-size=\"12\" transform=\"rotate(-90 14 "
     << px((T + H - B) / 2) << ")\">w_plus</text>\n";

  // reference level 1/sqrt(2)
  os << "<line x1=\"" << px(L) << "\" y1=\"" << px(sy(ref)) << "\" x2=\""
     << px(W - R) << "\" y2=\"" << px(sy(ref))
     << "\" stroke=\"#666\" stroke-dasharray=\"6,4\"/>\n";
  os << "<text x=\"" << px(W - R - 4) << "\" y=\"" << px(sy(ref) - 5)
     << "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"11\" "
        "fill=\"#666\">0.70711</text>\n";

  const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
  int color = 0;
  double legend_y = T + 16;
  for (const auto& [label, pts] : series) {
    const char* col = palette[color % 4];
    ++color;
    os << "<polyline fill=\"none\" stroke=\"" << col << "\" points=\"";
    for (const Pt& p : pts) os << px(sx(p.x)) << ',' << px(sy(p.y)) << ' ';
    os << "\"/>\n";
    for (const Pt& p : pts)
      os << "<circle cx=\"" << px(sx(p.x)) << "\" cy=\"" << px(sy(p.y))
         << "\" r=\"3\" fill=\"" << col << "\"/>\n";
    os << "<text x=\"" << px(L + 12) << "\" y=\"" << px(legend_y)
       << "\" font-family=\"monospace\" font-size=\"12\" fill=\"" << col
       << "\">" << label << "</text>\n";
    legend_y += 16;
  }
  os << "</svg>\n";
}

}  // namespace hjg
