#include "fiberscope/complex_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace fiberscope {

namespace {

std::string format_double(double x) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  (void)ec;
  return std::string(buf, p);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);  // from_chars rejects '+'
  if (s.empty()) throw ConfigError("empty number in complex literal");
  double v = 0.0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size())
    throw ConfigError("bad number '" + std::string(s) + "' in complex literal");
  return v;
}

// Parses an optionally signed literal; "" / "+" / "-" mean +-1 (bare i).
double parse_coefficient(std::string_view s) {
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  return parse_double(s);
}

}  // namespace

std::string format_complex(Complex v) {
  const double re = v.real(), im = v.imag();
  std::string out = format_double(re);
  out += std::signbit(im) ? '-' : '+';
  out += format_double(std::abs(im));
  out += 'i';
  return out;
}

std::string format_complex_list(const CVec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += format_complex(v[i]);
  }
  return out;
}

Complex parse_complex(std::string_view raw) {
  std::string_view s = trim(raw);
  if (s.empty()) throw ConfigError("empty complex literal");

  const bool imaginary = (s.back() == 'i' || s.back() == 'I');
  if (imaginary) s.remove_suffix(1);

  // Split at the last top-level '+'/'-' (one not opening the string and not
  // part of an exponent).
  std::size_t split = std::string_view::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    const char c = s[k];
    if ((c == '+' || c == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }

  if (!imaginary) {
    return Complex(parse_double(s), 0.0);
  }
  if (split == std::string_view::npos) {
    return Complex(0.0, parse_coefficient(s));
  }
  const double re = parse_double(s.substr(0, split));
  const double im = parse_coefficient(s.substr(split));
  return Complex(re, im);
}

CVec parse_complex_list(std::string_view csv) {
  CVec out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t comma = csv.find(',', pos);
    if (comma == std::string_view::npos) comma = csv.size();
    out.push_back(parse_complex(csv.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return out;
}

}  // namespace fiberscope
