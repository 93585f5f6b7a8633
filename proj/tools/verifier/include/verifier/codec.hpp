#ifndef VERIFIER_CODEC_HPP
#define VERIFIER_CODEC_HPP

#include <json.hpp>

#include "metacocycle/doubling.hpp"

// Exact JSON encodings: rationals are "n/d" strings, elements of E are
// [re, im] pairs, matrices are arrays of rows.
namespace verifier::codec {

using nlohmann::json;
namespace mc = metacocycle;

json encode(const mc::Rational& x);
json encode(const mc::QuadExt& x);
json encode(const mc::MatrixF& a);
json encode(const mc::MatrixE& a);
json encode(const mc::SimilitudeElement& g);
json encode(const mc::GSpElement& s);

mc::Rational rational(const json& j);
mc::QuadExt quad(const json& j, const mc::Rational& delta);
mc::MatrixF matrix_f(const json& j);
mc::MatrixE matrix_e(const json& j, const mc::Rational& delta);
mc::SimilitudeElement similitude(const json& j, const mc::Rational& delta);
mc::GSpElement gsp(const json& j);

}  // namespace verifier::codec

#endif  // VERIFIER_CODEC_HPP
