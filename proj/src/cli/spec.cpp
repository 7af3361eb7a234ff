#include <cctype>
#include <string>

#include "abelian/cli.hpp"
#include "abelian/errors.hpp"

namespace abelian::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

BigInt parse_integer(std::string_view token, std::string_view what) {
  token = trim(token);
  std::string digits(token);
  const bool negative = !digits.empty() && (digits[0] == '-' || digits[0] == '+');
  const std::size_t start = negative ? 1 : 0;
  if (digits.size() == start) throw ParseError("empty " + std::string(what));
  for (std::size_t i = start; i < digits.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(digits[i])))
      throw ParseError("invalid " + std::string(what) + " '" + digits + "'");
  BigInt v;
  if (v.set_str(digits[0] == '+' ? digits.substr(1) : digits, 10) != 0)
    throw ParseError("invalid " + std::string(what) + " '" + digits + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string join(const std::vector<BigInt>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += values[i].get_str();
  }
  return out;
}

}  // namespace

std::vector<BigInt> parse_group_spec(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty group spec");
  const bool product_form = text.find(',') == std::string_view::npos &&
                            (text.find('x') != std::string_view::npos || text.front() == 'C');
  std::vector<BigInt> moduli;
  for (auto token : split(text, product_form ? 'x' : ',')) {
    token = trim(token);
    if (product_form && !token.empty() && token.front() == 'C') token.remove_prefix(1);
    BigInt d = parse_integer(token, "cyclic order");
    if (d < 1) throw NonPositiveModulus("cyclic order must be >= 1, got " + d.get_str());
    moduli.push_back(std::move(d));
  }
  return moduli;
}

std::vector<BigInt> parse_element_spec(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty element spec");
  std::vector<BigInt> coords;
  for (auto token : split(text, ',')) coords.push_back(parse_integer(token, "residue"));
  return coords;
}

std::string format_group_spec(const AbelianGroup& g) { return join(g.moduli()); }

std::string format_element_spec(const GroupElement& x) { return join(x.coords()); }

}  // namespace abelian::cli
