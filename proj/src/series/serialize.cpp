#include "mercator/series/serialize.hpp"

#include "json.hpp"

#include <sstream>
#include <stdexcept>

namespace mercator::series {

using ordered_json = nlohmann::ordered_json;

std::string to_json(const UnivariateSeries& s) {
  ordered_json doc;
  doc["order"] = s.order();
  doc["coefficients"] = ordered_json::array();
  for (int n = 0; n <= s.order(); ++n) {
    if (s[n].is_zero()) continue;
    ordered_json c;
    c["n"] = n;
    c["value"] = s[n].to_string();
    doc["coefficients"].push_back(std::move(c));
  }
  return doc.dump();
}

std::string to_json(const BivariateSeries& s) {
  ordered_json doc;
  doc["order"] = s.order();
  doc["coefficients"] = ordered_json::array();
  for (int d = 0; d <= s.order(); ++d)
    for (int i = 0; i <= d; ++i) {
      const BigRational& v = s.at(i, d - i);
      if (v.is_zero()) continue;
      ordered_json c;
      c["i"] = i;
      c["j"] = d - i;
      c["value"] = v.to_string();
      doc["coefficients"].push_back(std::move(c));
    }
  return doc.dump();
}

std::string to_csv(const UnivariateSeries& s) {
  std::ostringstream out;
  out << "n,value\n";
  for (int n = 0; n <= s.order(); ++n)
    if (!s[n].is_zero()) out << n << ',' << s[n] << '\n';
  return out.str();
}

std::string to_csv(const BivariateSeries& s) {
  std::ostringstream out;
  out << "i,j,value\n";
  for (int d = 0; d <= s.order(); ++d)
    for (int i = 0; i <= d; ++i)
      if (!s.at(i, d - i).is_zero()) out << i << ',' << d - i << ',' << s.at(i, d - i) << '\n';
  return out.str();
}

namespace {

ordered_json parse_document(std::string_view text) {
  ordered_json doc = ordered_json::parse(text);
  if (!doc.is_object() || !doc.contains("order") || !doc.contains("coefficients")) {
    throw std::invalid_argument("series JSON: expected {\"order\", \"coefficients\"}");
  }
  return doc;
}

}  // namespace

UnivariateSeries univariate_from_json(std::string_view text) {
  const ordered_json doc = parse_document(text);
  UnivariateSeries s(doc.at("order").get<int>());
  for (const auto& c : doc.at("coefficients")) {
    const int n = c.at("n").get<int>();
    if (n < 0 || n > s.order()) throw std::invalid_argument("series JSON: degree out of range");
    s[n] = BigRational::parse(c.at("value").get<std::string>());
  }
  return s;
}

BivariateSeries bivariate_from_json(std::string_view text) {
  const ordered_json doc = parse_document(text);
  BivariateSeries s(doc.at("order").get<int>());
  for (const auto& c : doc.at("coefficients")) {
    s.at(c.at("i").get<int>(), c.at("j").get<int>()) =
        BigRational::parse(c.at("value").get<std::string>());
  }
  return s;
}

}  // namespace mercator::series
