#include "zfhp/parse.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>

#include "zfhp/errors.hpp"

namespace zfhp {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::uint64_t parse_unsigned(std::string_view text) {
  text = trim(text);
  std::uint64_t value = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() || text.empty()) {
    throw InvalidArgument("expected a non-negative integer, got '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

double parse_real(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw InvalidArgument("expected a real number, got '" + std::string(text) + "'");
  }
  return value;
}

std::vector<double> parse_real_list(std::string_view text) {
  std::vector<double> out;
  for (const auto part : split(text, ',')) out.push_back(parse_real(part));
  return out;
}

FunctionalPoint parse_point(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw InvalidArgument("empty complex number");
  if (s.back() != 'i') return FunctionalPoint(parse_real(s), 0.0);
  const std::string_view body = s.substr(0, s.size() - 1);
  // split at the last sign that is not leading and not an exponent sign
  std::size_t split_at = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split_at = i;
      break;
    }
  }
  auto imag_part = [&](std::string_view t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_real(t);
  };
  if (split_at == std::string_view::npos) return FunctionalPoint(0.0, imag_part(body));
  return FunctionalPoint(parse_real(body.substr(0, split_at)), imag_part(body.substr(split_at)));
}

std::vector<FunctionalPoint> parse_point_list(std::string_view text) {
  std::vector<FunctionalPoint> out;
  for (const auto part : split(text, ',')) out.push_back(parse_point(part));
  return out;
}

std::vector<FunctionalPoint> parse_s_grid(std::string_view text) {
  const auto x = text.find('x');
  if (x == std::string_view::npos) return parse_point_list(text);
  std::vector<double> re;
  std::vector<double> im;
  for (const auto part : split(text.substr(0, x), ',')) re.push_back(parse_real(part));
  for (const auto part : split(text.substr(x + 1), ',')) im.push_back(parse_real(part));
  std::vector<FunctionalPoint> out;
  for (const double a : re) {
    for (const double b : im) out.emplace_back(a, b);
  }
  return out;
}

std::vector<std::uint64_t> parse_index_list(std::string_view text) {
  std::vector<std::uint64_t> out;
  for (const auto part : split(text, ',')) {
    const auto dots = part.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(parse_unsigned(part));
      continue;
    }
    const std::uint64_t lo = parse_unsigned(part.substr(0, dots));
    const std::uint64_t hi = parse_unsigned(part.substr(dots + 2));
    if (hi < lo) throw InvalidArgument("empty range '" + std::string(part) + "'");
    for (std::uint64_t v = lo; v <= hi; ++v) out.push_back(v);
  }
  return out;
}

}  // namespace zfhp
