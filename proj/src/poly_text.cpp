#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <string>

#include "ep/poly.hpp"

namespace ep {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_uint(std::string_view s, const char* what) {
  s = trim(s);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument(std::string("malformed ") + what + ": '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::string to_string(const Poly& a) {
  const long d = a.degree();
  if (d < 0) return "0";
  std::ostringstream out;
  bool first = true;
  for (long i = d; i >= 0; --i) {
    const Coef c = a[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) out << '+';
    first = false;
    if (i == 0) {
      out << c;
      continue;
    }
    if (c != 1) out << c << '*';
    out << 'x';
    if (i > 1) out << '^' << i;
  }
  return out.str();
}

std::string to_machine(const Poly& a) {
  std::ostringstream out;
  out << "p=" << a.field()->p() << ";k=" << a.field()->k() << ";coeffs=";
  const long d = a.degree();
  if (d < 0) {
    out << '0';
    return out.str();
  }
  for (long i = 0; i <= d; ++i) {
    if (i) out << ',';
    out << a[static_cast<std::size_t>(i)];
  }
  return out.str();
}

std::string to_hex_form(const Poly& a) {
  if (!a.packed()) throw std::invalid_argument("hex form is only defined over F_2");
  static const char* digits = "0123456789abcdef";
  std::string out = "p=2;hex=";
  const auto& w = a.words();
  if (w.empty()) return out + "00";
  const long d = a.degree();
  const std::size_t nbytes = static_cast<std::size_t>(d) / 8 + 1;
  for (std::size_t i = 0; i < nbytes; ++i) {
    const unsigned byte = static_cast<unsigned>((w[i / 8] >> (8 * (i % 8))) & 0xff);
    out += digits[byte >> 4];
    out += digits[byte & 0xf];
  }
  return out;
}

Poly parse_poly(std::string_view text, const Field& field) {
  const std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty polynomial text");
  if (s.starts_with("p=")) {
    Poly r = parse_machine(s);
    require_same_field(r.field(), field);
    return r;
  }
  Poly result(field);
  std::size_t pos = 0;
  bool negative = false;
  auto skip_ws = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  skip_ws();
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    negative = s[pos] == '-';
    ++pos;
  }
  while (true) {
    skip_ws();
    // term := [coef ['*']] 'x' ['^' int] | coef
    std::uint64_t coef = 1;
    bool have_coef = false;
    const std::size_t num_start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos > num_start) {
      coef = parse_uint(s.substr(num_start, pos - num_start), "coefficient");
      have_coef = true;
    }
    skip_ws();
    if (have_coef && pos < s.size() && s[pos] == '*') {
      ++pos;
      skip_ws();
      if (pos >= s.size() || s[pos] != 'x') throw std::invalid_argument("expected 'x' after '*'");
    }
    std::uint64_t exponent = 0;
    if (pos < s.size() && s[pos] == 'x') {
      ++pos;
      exponent = 1;
      skip_ws();
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        skip_ws();
        const std::size_t e_start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        exponent = parse_uint(s.substr(e_start, pos - e_start), "exponent");
      }
    } else if (!have_coef) {
      throw std::invalid_argument("malformed polynomial near position " + std::to_string(pos) + ": '" +
                                  std::string(s) + "'");
    }
    Coef c;
    if (field->is_prime_field()) {
      c = static_cast<Coef>(coef % field->p());
    } else {
      if (coef >= field->scalar_count()) throw std::invalid_argument("coefficient out of range for field");
      c = static_cast<Coef>(coef);
    }
    if (negative) c = field->neg(c);
    result += Poly::monomial(field, c, exponent);
    skip_ws();
    if (pos >= s.size()) break;
    if (s[pos] != '+' && s[pos] != '-') {
      throw std::invalid_argument("unexpected character '" + std::string(1, s[pos]) + "' in polynomial");
    }
    negative = s[pos] == '-';
    ++pos;
  }
  return result;
}

Poly parse_machine(std::string_view text) {
  const std::string_view s = trim(text);
  std::uint64_t p = 0;
  std::uint64_t k = 1;
  std::string_view coeffs;
  std::string_view hex;
  bool have_coeffs = false;
  bool have_hex = false;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(';', start);
    if (end == std::string_view::npos) end = s.size();
    const std::string_view field = s.substr(start, end - start);
    const std::size_t eq = field.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument("malformed machine polynomial: " + std::string(s));
    const std::string_view key = trim(field.substr(0, eq));
    const std::string_view value = trim(field.substr(eq + 1));
    if (key == "p") {
      p = parse_uint(value, "p");
    } else if (key == "k") {
      k = parse_uint(value, "k");
    } else if (key == "coeffs") {
      coeffs = value;
      have_coeffs = true;
    } else if (key == "hex") {
      hex = value;
      have_hex = true;
    } else {
      throw std::invalid_argument("unknown key in machine polynomial: " + std::string(key));
    }
    start = end + 1;
  }
  if (p == 0 || p >= kPrimeBound) throw std::invalid_argument("machine polynomial lacks a valid p");
  if (have_hex == have_coeffs) throw std::invalid_argument("machine polynomial needs exactly one of coeffs/hex");
  if (have_hex) {
    if (p != 2 || k != 1) throw std::invalid_argument("hex form requires p=2, k=1");
    if (hex.size() % 2 != 0) throw std::invalid_argument("hex form needs whole bytes");
    std::vector<Poly::Word> words((hex.size() / 2 + 7) / 8, 0);
    for (std::size_t i = 0; i < hex.size() / 2; ++i) {
      unsigned byte = 0;
      auto [ptr, ec] = std::from_chars(hex.data() + 2 * i, hex.data() + 2 * i + 2, byte, 16);
      if (ec != std::errc() || ptr != hex.data() + 2 * i + 2) throw std::invalid_argument("bad hex digit");
      words[i / 8] |= static_cast<Poly::Word>(byte) << (8 * (i % 8));
    }
    return Poly::from_words(std::move(words));
  }
  const Field field = make_field(static_cast<std::uint32_t>(p), static_cast<unsigned>(k));
  std::vector<Coef> c;
  std::size_t pos = 0;
  while (pos <= coeffs.size() && !coeffs.empty()) {
    std::size_t comma = coeffs.find(',', pos);
    if (comma == std::string_view::npos) comma = coeffs.size();
    const std::uint64_t v = parse_uint(coeffs.substr(pos, comma - pos), "coefficient");
    if (v >= field->scalar_count()) throw std::invalid_argument("coefficient out of range for field");
    c.push_back(static_cast<Coef>(v));
    pos = comma + 1;
  }
  return Poly(field, std::move(c));
}

}  // namespace ep
