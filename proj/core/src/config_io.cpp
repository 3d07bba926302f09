#include "gpd/config_io.hpp"

#include <nlohmann/json.hpp>

#include <numeric>

namespace gpd {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

Integer to_integer(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    // Large integers round-trip as strings.
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
      fail(where, "expected an integer");
    }
  }
  fail(where, "expected an integer");
}

FieldElement parse_coeff(const Field& f, const json& j,
                         const std::string& where) {
  if (j.is_number_integer() || j.is_string()) {
    return f.rational(Rational(to_integer(j, where)));
  }
  if (j.is_array()) {
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
      coeffs.emplace_back(
          to_integer(j[i], where + "[" + std::to_string(i) + "]"));
    }
    if (coeffs.empty()) fail(where, "empty coefficient array");
    return f.element(std::move(coeffs));
  }
  fail(where, "coefficient must be an integer or an array of integers");
}

ProjPoint parse_point(const Field& f, const json& j, std::size_t arity,
                      const std::string& where) {
  if (!j.is_array() || j.size() != arity) {
    fail(where, "expected an array of " + std::to_string(arity) +
                    " coefficients");
  }
  std::vector<FieldElement> coords;
  coords.reserve(arity);
  for (std::size_t i = 0; i < arity; ++i) {
    coords.push_back(
        parse_coeff(f, j[i], where + "[" + std::to_string(i) + "]"));
  }
  try {
    return ProjPoint(std::move(coords));
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

}  // namespace

Configuration parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON at byte ") +
                     std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) fail("document", "expected a JSON object");
  if (!doc.contains("field") || !doc["field"].is_object() ||
      !doc["field"].contains("min_poly")) {
    fail("field", "missing field.min_poly");
  }
  const json& mp = doc["field"]["min_poly"];
  if (!mp.is_array() || mp.size() < 2) {
    fail("field.min_poly", "expected an array of at least 2 integers");
  }
  std::vector<Integer> min_poly;
  min_poly.reserve(mp.size());
  for (std::size_t i = 0; i < mp.size(); ++i) {
    min_poly.push_back(
        to_integer(mp[i], "field.min_poly[" + std::to_string(i) + "]"));
  }
  if (min_poly.back() != 1) {
    fail("field.min_poly", "minimal polynomial must be monic");
  }
  Field f = Field::from_min_poly(std::move(min_poly));

  if (!doc.contains("lines") || !doc["lines"].is_array() ||
      doc["lines"].empty()) {
    fail("lines", "expected a nonempty array");
  }
  Configuration c;
  c.field = f;
  c.name = doc.value("name", std::string{});
  std::size_t arity = 0;
  for (std::size_t i = 0; i < doc["lines"].size(); ++i) {
    const std::string where = "lines[" + std::to_string(i) + "]";
    const json& lj = doc["lines"][i];
    if (!lj.is_object() || !lj.contains("basis") || !lj["basis"].is_array() ||
        lj["basis"].size() != 2) {
      fail(where, "expected an object with a 2-row basis");
    }
    if (arity == 0) {
      if (!lj["basis"][0].is_array()) fail(where + ".basis[0]", "expected an array");
      arity = lj["basis"][0].size();
      if (arity < 4 || arity > 5) {
        fail(where + ".basis[0]", "lines must have 4 or 5 coordinates");
      }
    }
    ProjPoint b0 = parse_point(f, lj["basis"][0], arity, where + ".basis[0]");
    ProjPoint b1 = parse_point(f, lj["basis"][1], arity, where + ".basis[1]");
    try {
      c.lines.emplace_back(std::move(b0), std::move(b1));
    } catch (const Error& e) {
      fail(where, e.what());
    }
  }
  for (std::size_t i = 0; i < c.lines.size(); ++i) {
    for (std::size_t j = i + 1; j < c.lines.size(); ++j) {
      if (c.lines[i].same_line(c.lines[j])) {
        fail("lines", "lines[" + std::to_string(i) + "] and lines[" +
                          std::to_string(j) + "] span the same subspace");
      }
    }
  }

  if (doc.contains("marked")) {
    const json& mj = doc["marked"];
    if (!mj.is_array() || mj.size() != c.lines.size()) {
      fail("marked", "expected one marked set per line");
    }
    c.marked.emplace();
    for (std::size_t i = 0; i < mj.size(); ++i) {
      const std::string where = "marked[" + std::to_string(i) + "]";
      if (!mj[i].is_array()) fail(where, "expected an array of P^1 points");
      std::vector<ProjPoint> pts;
      for (std::size_t k = 0; k < mj[i].size(); ++k) {
        pts.push_back(parse_point(f, mj[i][k], 2,
                                  where + "[" + std::to_string(k) + "]"));
      }
      c.marked->push_back(std::move(pts));
    }
  }
  try {
    c.validate();
  } catch (const Error& e) {
    fail("document", e.what());
  }
  return c;
}

namespace {

json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() &&
      v <= std::numeric_limits<long long>::max()) {
    return static_cast<long long>(v);
  }
  return v.str();
}

// Scale a canonical projective vector to a primitive integer vector: clear
// denominators, divide by the gcd, sign from the first nonzero entry.
json emit_point(const ProjPoint& p) {
  Integer lcm_den = 1;
  for (const FieldElement& x : p.coords()) {
    for (const Rational& r : x.coeffs()) {
      lcm_den = boost::multiprecision::lcm(lcm_den,
                                           boost::multiprecision::denominator(r));
    }
  }
  std::vector<std::vector<Integer>> scaled;
  Integer common = 0;
  for (const FieldElement& x : p.coords()) {
    std::vector<Integer> cs;
    for (const Rational& r : x.coeffs()) {
      Rational v = r * lcm_den;
      Integer n = boost::multiprecision::numerator(v);
      cs.push_back(n);
      common = boost::multiprecision::gcd(common, n);
    }
    scaled.push_back(std::move(cs));
  }
  if (common == 0) common = 1;
  json out = json::array();
  for (auto& cs : scaled) {
    // Trim trailing zero coefficients; integers collapse to plain numbers.
    std::size_t len = cs.size();
    while (len > 1 && cs[len - 1] == 0) --len;
    if (len == 1) {
      out.push_back(integer_json(cs[0] / common));
    } else {
      json arr = json::array();
      for (std::size_t i = 0; i < len; ++i) {
        arr.push_back(integer_json(cs[i] / common));
      }
      out.push_back(std::move(arr));
    }
  }
  return out;
}

}  // namespace

std::string emit_config(const Configuration& c) {
  json doc;
  doc["name"] = c.name;
  json mp = json::array();
  for (const Integer& x : c.field.min_poly()) mp.push_back(integer_json(x));
  doc["field"] = json{{"min_poly", mp}};
  json lines = json::array();
  for (const ParamLine& l : c.lines) {
    lines.push_back(
        json{{"basis", json::array({emit_point(l.basis0()),
                                    emit_point(l.basis1())})}});
  }
  doc["lines"] = std::move(lines);
  if (c.marked) {
    json marked = json::array();
    for (const auto& pts : *c.marked) {
      json row = json::array();
      for (const ProjPoint& p : pts) row.push_back(emit_point(p));
      marked.push_back(std::move(row));
    }
    doc["marked"] = std::move(marked);
  }
  return doc.dump(2) + "\n";
}

}  // namespace gpd
