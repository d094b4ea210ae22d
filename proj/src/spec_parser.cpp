#include "univalence/spec_parser.hpp"

#include <charconv>
#include <cmath>
#include <vector>

#include "univalence/format.hpp"

namespace univalence {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw Error(ErrorKind::InvalidSpec, "not a finite real number: '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::vector<cplx> parse_complex_list(std::string_view text) {
  std::vector<cplx> values;
  if (trim(text).empty()) return values;
  for (auto part : split(text, ';')) values.push_back(parse_complex(part));
  return values;
}

std::string join_complex(const std::vector<cplx>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ';';
    out += format_complex(values[i]);
  }
  return out;
}

}  // namespace

cplx parse_complex(std::string_view text) {
  const auto parts = split(trim(text), ',');
  if (parts.size() == 1) return {parse_real(parts[0]), 0.0};
  if (parts.size() == 2) return {parse_real(parts[0]), parse_real(parts[1])};
  throw Error(ErrorKind::InvalidSpec, "complex value must be 're' or 're,im': '" + std::string(text) + "'");
}

std::string format_complex(cplx z) {
  if (z.imag() == 0.0) return format_double(z.real());
  return format_double(z.real()) + "," + format_double(z.imag());
}

MeromorphicFn parse_function(std::string_view text) {
  text = trim(text);
  const std::size_t colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  if (head == "identity") {
    if (colon != std::string_view::npos) throw Error(ErrorKind::InvalidSpec, "identity takes no parameters");
    return identity_fn();
  }
  if (head == "joukowski") return joukowski_fn(parse_complex(rest));
  if (head == "laurent") {
    const auto fields = parse_complex_list(rest);
    if (fields.size() < 2) throw Error(ErrorKind::InvalidSpec, "laurent needs at least b;b0");
    return laurent_fn(fields[0], fields[1], std::vector<cplx>(fields.begin() + 2, fields.end()));
  }
  if (head == "moebius") {
    const std::size_t inner_colon = rest.find(':');
    if (inner_colon == std::string_view::npos) {
      throw Error(ErrorKind::InvalidSpec, "moebius needs coefficients and an inner function");
    }
    const std::string_view coeff_text = rest.substr(0, inner_colon);
    std::vector<cplx> coeffs;
    if (coeff_text.find(';') != std::string_view::npos) {
      coeffs = parse_complex_list(coeff_text);
    } else {
      for (auto part : split(coeff_text, ',')) coeffs.emplace_back(parse_real(part), 0.0);
    }
    if (coeffs.size() != 4) throw Error(ErrorKind::InvalidSpec, "moebius needs exactly four coefficients");
    return moebius_fn(parse_function(rest.substr(inner_colon + 1)), coeffs[0], coeffs[1], coeffs[2], coeffs[3]);
  }
  throw Error(ErrorKind::InvalidSpec, "unknown function '" + std::string(text) + "'");
}

HFunction parse_h_function(std::string_view text) {
  text = trim(text);
  const std::size_t colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  if (head == "hconst") {
    if (colon != std::string_view::npos) throw Error(ErrorKind::InvalidSpec, "hconst takes no parameters");
    return constant_one_h();
  }
  if (head == "hinvsq") return inverse_square_h(parse_complex(rest));
  if (head == "heven") return make_h_function(LaurentEven{parse_complex_list(rest)});
  if (head == "hlaurent") return make_h_function(InversePowerSeries{parse_complex_list(rest)});
  throw Error(ErrorKind::InvalidSpec, "unknown h-function '" + std::string(text) + "'");
}

std::string to_spec_string(const MeromorphicFn& f) {
  return std::visit(
      overloaded{
          [](const Identity&) -> std::string { return "identity"; },
          [](const Joukowski& j) -> std::string { return "joukowski:" + format_complex(j.c); },
          [](const Laurent& l) -> std::string {
            std::vector<cplx> fields{l.b, l.b0};
            fields.insert(fields.end(), l.tail.begin(), l.tail.end());
            return "laurent:" + join_complex(fields);
          },
          [](const MoebiusOf& m) -> std::string {
            const std::vector<cplx> coeffs{m.a, m.b, m.c, m.d};
            bool real = true;
            for (cplx c : coeffs) real = real && c.imag() == 0.0;
            std::string text = "moebius:";
            if (real) {
              for (std::size_t i = 0; i < 4; ++i) text += (i ? "," : "") + format_double(coeffs[i].real());
            } else {
              text += join_complex(coeffs);
            }
            return text + ":" + to_spec_string(*m.inner);
          },
      },
      f.spec());
}

std::string to_spec_string(const HFunction& h) {
  return std::visit(
      overloaded{
          [](const ConstantOne&) -> std::string { return "hconst"; },
          [](const InverseSquare& s) -> std::string { return "hinvsq:" + format_complex(s.c); },
          [](const LaurentEven& s) -> std::string { return "heven:" + join_complex(s.coeffs); },
      },
      h.spec());
}

}  // namespace univalence
