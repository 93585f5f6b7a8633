#include "verifier/codec.hpp"

#include "metacocycle/error.hpp"

namespace verifier::codec {

namespace {

template <typename T, typename F>
json encode_matrix(const mc::Matrix<T>& a, F entry) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < a.cols(); ++k) row.push_back(entry(a(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <typename T, typename F>
mc::Matrix<T> decode_matrix(const json& j, F entry) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) {
    throw mc::Error(mc::ErrorKind::ParseError, "expected a nonempty array of rows");
  }
  mc::Matrix<T> a(j.size(), j[0].size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i].size() != a.cols()) throw mc::Error(mc::ErrorKind::ParseError, "ragged matrix");
    for (std::size_t k = 0; k < a.cols(); ++k) a(i, k) = entry(j[i][k]);
  }
  return a;
}

}  // namespace

json encode(const mc::Rational& x) {
  mc::Rational c = x;
  c.canonicalize();
  return mc::to_string(c);
}
json encode(const mc::QuadExt& x) { return json::array({encode(x.re()), encode(x.im())}); }
json encode(const mc::MatrixF& a) {
  return encode_matrix(a, [](const mc::Rational& x) { return encode(x); });
}
json encode(const mc::MatrixE& a) {
  return encode_matrix(a, [](const mc::QuadExt& x) { return encode(x); });
}
json encode(const mc::SimilitudeElement& g) { return {{"mat", encode(g.mat)}, {"nu", encode(g.nu)}}; }
json encode(const mc::GSpElement& s) { return {{"mat", encode(s.mat)}, {"nu", encode(s.nu)}}; }

mc::Rational rational(const json& j) {
  if (!j.is_string()) throw mc::Error(mc::ErrorKind::ParseError, "rationals must be strings");
  return mc::parse_rational(j.get<std::string>());
}

mc::QuadExt quad(const json& j, const mc::Rational& delta) {
  if (!j.is_array() || j.size() != 2) throw mc::Error(mc::ErrorKind::ParseError, "expected [re, im]");
  return {rational(j[0]), rational(j[1]), delta};
}

mc::MatrixF matrix_f(const json& j) {
  return decode_matrix<mc::Rational>(j, [](const json& x) { return rational(x); });
}

mc::MatrixE matrix_e(const json& j, const mc::Rational& delta) {
  return decode_matrix<mc::QuadExt>(j, [&](const json& x) { return quad(x, delta); });
}

mc::SimilitudeElement similitude(const json& j, const mc::Rational& delta) {
  return {matrix_e(j.at("mat"), delta), rational(j.at("nu"))};
}

mc::GSpElement gsp(const json& j) { return {matrix_f(j.at("mat")), rational(j.at("nu"))}; }

}  // namespace verifier::codec
