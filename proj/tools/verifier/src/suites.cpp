#include "verifier/suites.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>

#include "metacocycle/cocycle.hpp"
#include "metacocycle/error.hpp"
#include "verifier/codec.hpp"

namespace verifier {

namespace mc = metacocycle;
using nlohmann::json;
using mc::Error;
using mc::ErrorKind;
using mc::Mu8;

namespace {

struct Env {
  explicit Env(const RunConfig& c)
      : cfg(c),
        ctx(c.p, c.delta, c.psi_scale),
        d(mc::HermitianSpace::diagonal(c.gram_V, c.delta), mc::SplitSkewHermitianSpace(c.r, c.delta)) {
    try {
      chi.emplace(c.m, ctx);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ChiUnavailable) throw;
      chi_error = e.what();
    }
  }

  RunConfig cfg;
  mc::LocalContext ctx;
  mc::DoubledSpace d;
  std::optional<mc::CharacterChi> chi;
  std::string chi_error;
  mutable std::map<std::string, Mu8> oracle_cache;

  const mc::HermitianSpace& v() const { return d.v(); }
  const mc::SplitSkewHermitianSpace& w() const { return d.w(); }
  long m() const { return static_cast<long>(d.m()); }
  long r() const { return static_cast<long>(d.r()); }
};

std::string exponent(Mu8 x) { return std::to_string(x.exponent()); }

/// Records the first failing check of a trial.
class Checks {
 public:
  void mu8(const std::string& name, Mu8 expected, Mu8 actual) {
    if (!(expected == actual)) fail(name, exponent(expected), exponent(actual));
  }
  void integer(const std::string& name, long expected, long actual) {
    if (expected != actual) fail(name, std::to_string(expected), std::to_string(actual));
  }
  void holds(const std::string& name, bool ok) {
    if (!ok) fail(name, "holds", "fails");
  }
  void fail(const std::string& name, std::string expected, std::string actual) {
    if (failed_) return;
    failed_ = true;
    check_ = name;
    expected_ = std::move(expected);
    actual_ = std::move(actual);
  }

  bool failed() const { return failed_; }
  const std::string& check() const { return check_; }
  const std::string& expected() const { return expected_; }
  const std::string& actual() const { return actual_; }

  std::optional<bool> witness;

 private:
  bool failed_ = false;
  std::string check_, expected_, actual_;
};

struct Suite {
  const char* name;
  bool needs_chi;
  json (*generate)(const Env&, mc::Rng&, long trial);
  void (*evaluate)(const Env&, const json&, Checks&);
};

mc::Rng trial_rng(std::uint64_t seed, const std::string& suite, long trial) {
  std::uint32_t h = 2166136261U;
  for (unsigned char c : suite) h = (h ^ c) * 16777619U;
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), h,
                    static_cast<std::uint32_t>(trial)};
  return mc::Rng(seq);
}

// ---- generators ----

mc::GSpElement random_gsp(const Env& e, mc::Rng& rng) {
  mc::GSpElement s = mc::random_symplectic(e.d, rng, e.cfg.word_len, 6);
  if (mc::draw_bool(rng)) s = s * mc::d_big(mc::draw_nonzero_rational(rng, 6), e.d);
  return s;
}

mc::GSpElement random_parabolic(const Env& e, mc::Rng& rng) {
  const std::size_t n = e.d.mn();
  mc::MatrixF a(n, n), b(n, n);
  do {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) a(i, k) = mc::draw_rational(rng, 4);
  } while (mc::is_zero(mc::det(a)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i; k < n; ++k) b(i, k) = b(k, i) = mc::draw_rational(rng, 4);
  mc::MatrixF levi(2 * n, 2 * n), unip = mc::MatrixF::identity(2 * n);
  levi.set_block(0, 0, a);
  levi.set_block(n, n, mc::inverse(a.transpose()));
  unip.set_block(0, n, b);
  return {levi * unip, 1};
}

mc::SimilitudeElement random_h(const Env& e, mc::Rng& rng, const mc::Rational& y) {
  return mc::d_scale(e.w(), y) * mc::random_unitary(e.w(), rng, e.cfg.word_len);
}

mc::SimilitudeElement random_h(const Env& e, mc::Rng& rng) {
  return random_h(e, rng, mc::draw_nonzero_rational(rng, 6));
}

mc::SimilitudeElement scalar_similitude(const Env& e, const mc::QuadExt& z) {
  return mc::make_similitude(mc::MatrixE::identity(e.d.m()) * z, e.v());
}

/// For even m the similitude factor ranges over all of F^x; for odd m over
/// the norms, realised by scalars.
mc::SimilitudeElement random_g(const Env& e, mc::Rng& rng) {
  mc::SimilitudeElement g1 = mc::random_unitary(e.v(), rng, 1);
  if (e.m() % 2 == 0 && mc::draw_bool(rng)) {
    try {
      return g1 * mc::similitude_with_factor(e.v(), mc::draw_nonzero_rational(rng, 6), e.cfg.search_bound);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::NotFound) throw;
    }
  }
  return g1 * scalar_similitude(e, mc::draw_nonzero_quad_ext(rng, e.ctx.delta(), 3));
}

std::vector<mc::Rational> square_class_reps(const mc::LocalContext& ctx) {
  const mc::Rational u(ctx.nonresidue()), p(ctx.p());
  return {1, u, p, u * p};
}

mc::Rational square_class_rep(const mc::Rational& y, const mc::LocalContext& ctx) {
  const int v = mc::valuation(y, ctx.p());
  const auto reps = square_class_reps(ctx);
  return reps[(mc::legendre(mc::unit_part(y, ctx.p()), ctx).is_one() ? 0 : 1) + (v % 2 != 0 ? 2 : 0)];
}

mc::Rational random_scalar(mc::Rng& rng, const Env& e) {
  mc::Rational y = mc::draw_nonzero_rational(rng, 30);
  const long k = mc::draw_int(rng, -3, 3);
  const mc::Rational p(e.ctx.p());
  for (long i = 0; i < std::abs(k); ++i) y = k > 0 ? mc::Rational(y * p) : mc::Rational(y / p);
  return y;
}

mc::Mu8 beta(const Env& e, const mc::SimilitudeElement& h) {
  return mc::beta_V_chi(mc::project_isometry(h, e.w()), e.d, *e.chi, e.ctx);
}

// ---- cocycle-identity ----

json gen_cocycle(const Env& e, mc::Rng& rng, long) {
  json in;
  in["a"] = codec::encode(random_gsp(e, rng));
  in["b"] = codec::encode(random_gsp(e, rng));
  in["c"] = codec::encode(random_gsp(e, rng));
  in["p"] = codec::encode(random_parabolic(e, rng));
  in["s"] = codec::encode(mc::random_symplectic(e.d, rng, e.cfg.word_len, 6));
  return in;
}

void eval_cocycle(const Env& e, const json& in, Checks& ck) {
  const auto a = codec::gsp(in.at("a")), b = codec::gsp(in.at("b")), c = codec::gsp(in.at("c"));
  const auto p = codec::gsp(in.at("p")), s = codec::gsp(in.at("s"));
  auto C = [&](const mc::GSpElement& x, const mc::GSpElement& y) { return mc::big_cocycle_C(x, y, e.d, e.ctx); };
  ck.mu8("cocycle identity", C(a, b) * C(a * b, c), C(a, b * c) * C(b, c));
  ck.mu8("parabolic left", Mu8::one(), mc::rao_cocycle(p, s, e.d, e.ctx));
  ck.mu8("parabolic right", Mu8::one(), mc::rao_cocycle(s, p, e.d, e.ctx));
}

// ---- relation-3 ----

json gen_relation(const Env& e, mc::Rng& rng, long) {
  json in;
  in["h"] = codec::encode(mc::random_unitary(e.w(), rng, e.cfg.word_len));
  in["h2"] = codec::encode(mc::random_unitary(e.w(), rng, e.cfg.word_len));
  return in;
}

void eval_relation(const Env& e, const json& in, Checks& ck) {
  const auto h = codec::similitude(in.at("h"), e.ctx.delta()), h2 = codec::similitude(in.at("h2"), e.ctx.delta());
  const Mu8 lhs = mc::rao_cocycle(mc::iota_V(h, e.d), mc::iota_V(h2, e.d), e.d, e.ctx);
  const Mu8 rhs = beta(e, h).inverse() * beta(e, h2).inverse() * beta(e, h * h2);
  ck.mu8("c(iota_V h, iota_V h') = beta(h)^-1 beta(h')^-1 beta(hh')", rhs, lhs);
}

// ---- lemma-31-1 / lemma-31-2 ----

json gen_lemma1(const Env& e, mc::Rng& rng, long) {
  json in;
  in["h"] = codec::encode(mc::random_unitary(e.w(), rng, e.cfg.word_len));
  in["y"] = codec::encode(random_scalar(rng, e));
  return in;
}

void eval_lemma1(const Env& e, const json& in, Checks& ck) {
  const auto h = codec::similitude(in.at("h"), e.ctx.delta());
  const mc::Rational y = codec::rational(in.at("y"));
  const mc::BruhatData b = mc::bruhat_decompose(h, e.w());
  const mc::BruhatData by = mc::bruhat_decompose(mc::conj_by_d(h, y, e.w()), e.w());
  ck.integer("j(h^y) = j(h)", static_cast<long>(b.j), static_cast<long>(by.j));
  mc::QuadExt want = b.x_class;
  for (std::size_t i = 0; i < b.j; ++i) want = want * mc::QuadExt(y);
  ck.holds("x(h^y) = x(h) y^j(h) mod norms", mc::same_norm_class(by.x_class, want, e.ctx));
}

json gen_lemma2(const Env& e, mc::Rng& rng, long) {
  json in;
  in["h"] = codec::encode(mc::random_unitary(e.w(), rng, e.cfg.word_len));
  return in;
}

void eval_lemma2(const Env& e, const json& in, Checks& ck) {
  const auto h = codec::similitude(in.at("h"), e.ctx.delta());
  const mc::BruhatData b = mc::bruhat_decompose(h, e.w());
  const mc::SpBruhatData s = mc::bruhat_sp(mc::iota_V(h, e.d), e.d);
  ck.integer("j(iota_V h) = 2m j(h)", 2 * e.m() * static_cast<long>(b.j), static_cast<long>(s.j));
  mc::Rational want = 1;
  const mc::Rational nx = b.x_class.norm(), md = -e.ctx.delta();
  for (long i = 0; i < e.m(); ++i) want *= nx;
  for (long i = 0; i < e.m() * static_cast<long>(b.j); ++i) want *= md;
  ck.holds("x(iota_V h) = N(x(h))^m (-Delta)^(m j(h)) mod squares", mc::is_square_at_p(s.x_class / want, e.ctx));
}

// ---- prop-32-H / prop-32-G ----

json gen_pair_h(const Env& e, mc::Rng& rng, long) {
  json in;
  in["h"] = codec::encode(random_h(e, rng));
  in["h2"] = codec::encode(random_h(e, rng));
  return in;
}

void eval_prop32h(const Env& e, const json& in, Checks& ck) {
  const auto h = codec::similitude(in.at("h"), e.ctx.delta()), h2 = codec::similitude(in.at("h2"), e.ctx.delta());
  const Mu8 c = mc::big_cocycle_C(mc::iota_V(h, e.d), mc::iota_V(h2, e.d), e.d, e.ctx);
  const mc::BruhatData b = mc::bruhat_decompose(mc::project_isometry(h, e.w()), e.w());
  const Mu8 want = beta(e, h).inverse() * beta(e, h2).inverse() * beta(e, h * h2) *
                   mc::hilbert_symbol(b.x_class.norm(), h2.nu, e.ctx).pow(e.m());
  ck.mu8("C(iota_V h, iota_V h') = d(beta) (N x(h_1), nu(h'))^m", want, c);
  if (e.m() % 2 == 0) ck.mu8("beta trivializes C on H", beta(e, h * h2), beta(e, h) * beta(e, h2) * c);
}

json gen_pair_g(const Env& e, mc::Rng& rng, long) {
  json in;
  in["g"] = codec::encode(random_g(e, rng));
  in["g2"] = codec::encode(random_g(e, rng));
  return in;
}

void eval_prop32g(const Env& e, const json& in, Checks& ck) {
  const auto g = codec::similitude(in.at("g"), e.ctx.delta()), g2 = codec::similitude(in.at("g2"), e.ctx.delta());
  const long mr = e.m() * e.r();
  const Mu8 c = mc::big_cocycle_C(mc::iota_W(g, e.d), mc::iota_W(g2, e.d), e.d, e.ctx);
  ck.mu8("C(iota_W g, iota_W g') = (nu(g), nu(g'))^(mr)", mc::hilbert_symbol(g.nu, g2.nu, e.ctx).pow(mr), c);
  auto t = [&](const mc::Rational& nu) { return mc::gamma_eta(nu, e.ctx).pow(mr); };
  ck.mu8("gamma(nu, eta)^(mr) trivializes C on G", t(g.nu * g2.nu), t(g.nu) * t(g2.nu) * c);
}

// ---- prop-33 ----

constexpr long kWitnessSamples = 100;

json gen_prop33(const Env& e, mc::Rng& rng, long trial) {
  const auto reps = square_class_reps(e.ctx);
  const mc::Rational t = mc::draw_nonzero_rational(rng, 4);
  json in;
  in["g"] = codec::encode(random_g(e, rng));
  in["h"] = codec::encode(random_h(e, rng, reps[static_cast<std::size_t>(trial) % 4] * t * t));
  return in;
}

void eval_prop33(const Env& e, const json& in, Checks& ck) {
  const auto g = codec::similitude(in.at("g"), e.ctx.delta()), h = codec::similitude(in.at("h"), e.ctx.delta());
  const Mu8 v = mc::commutator_value(g, h, e.d, e.ctx);
  ck.mu8("commutator = displayed formula", mc::commutator_formula(g, h, e.d, e.ctx), v);
  if (e.m() % 2 == 0) ck.mu8("commutator trivial for even m", Mu8::one(), v);
  ck.witness = !v.is_one();
}

// ---- gamma-props ----

json gen_gamma(const Env& e, mc::Rng& rng, long) {
  return {{"x", codec::encode(random_scalar(rng, e))}, {"y", codec::encode(random_scalar(rng, e))}};
}

void eval_gamma(const Env& e, const json& in, Checks& ck) {
  const mc::Rational x = codec::rational(in.at("x")), y = codec::rational(in.at("y"));
  auto g = [&](const mc::Rational& a) { return mc::gamma_eta(a, e.ctx); };
  ck.mu8("gamma(y, eta)^2 = (-1, y)", mc::hilbert_symbol(-1, y, e.ctx), g(y).pow(2));
  ck.mu8("(x, y) = gamma(x)^-1 gamma(y)^-1 gamma(xy)", mc::hilbert_symbol(x, y, e.ctx),
         g(x).inverse() * g(y).inverse() * g(x * y));
  const mc::Rational rep = square_class_rep(y, e.ctx);
  const std::string key = mc::to_string(rep);
  auto it = e.oracle_cache.find(key);
  if (it == e.oracle_cache.end()) {
    it = e.oracle_cache.emplace(key, mc::weil_index_gauss_oracle_stationary(rep, e.ctx, e.ctx.eta_scale())).first;
  }
  ck.mu8("closed-form Weil index = Gauss-sum oracle", it->second, mc::weil_index_scalar(y, e.ctx, e.ctx.eta_scale()));
}

// ---- bruhat-roundtrip ----

json gen_bruhat(const Env& e, mc::Rng& rng, long) {
  json in;
  in["h"] = codec::encode(mc::random_unitary(e.w(), rng, e.cfg.word_len));
  in["s"] = codec::encode(mc::random_symplectic(e.d, rng, e.cfg.word_len, 6));
  in["pivot_seed"] = std::to_string(rng());
  return in;
}

void eval_bruhat(const Env& e, const json& in, Checks& ck) {
  const auto h = codec::similitude(in.at("h"), e.ctx.delta());
  const auto s = codec::gsp(in.at("s"));
  mc::Rng pivots(std::stoull(in.at("pivot_seed").get<std::string>()));

  const mc::BruhatData a = mc::bruhat_decompose(h, e.w()), b = mc::bruhat_decompose(h, e.w(), &pivots);
  ck.holds("U(W): p1 tau_j p2 = h", a.p1 * mc::tau(e.w(), a.j) * a.p2 == h);
  ck.holds("U(W): randomized p1 tau_j p2 = h", b.p1 * mc::tau(e.w(), b.j) * b.p2 == h);
  ck.integer("U(W): j independent of choices", static_cast<long>(a.j), static_cast<long>(b.j));
  ck.holds("U(W): x independent of choices mod norms", mc::same_norm_class(a.x_class, b.x_class, e.ctx));

  const mc::SpBruhatData c = mc::bruhat_sp(s, e.d), d = mc::bruhat_sp(s, e.d, &pivots);
  ck.holds("Sp: p1 tau_j p2 = s", c.p1 * mc::tau_big(c.j, e.d) * c.p2 == s);
  ck.holds("Sp: randomized p1 tau_j p2 = s", d.p1 * mc::tau_big(d.j, e.d) * d.p2 == s);
  ck.integer("Sp: j independent of choices", static_cast<long>(c.j), static_cast<long>(d.j));
  ck.holds("Sp: x independent of choices mod squares", mc::is_square_at_p(c.x_class / d.x_class, e.ctx));
}

// ---- space-dichotomy ----

json gen_dichotomy(const Env& e, mc::Rng& rng, long) {
  std::vector<mc::Rational> head;
  mc::Rational c = (e.m() * (e.m() - 1) / 2) % 2 == 0 ? 1 : -1;
  for (long k = 0; k + 1 < e.m(); ++k) {
    head.push_back(mc::draw_nonzero_rational(rng, 6));
    c *= head.back();
  }
  json in;
  for (int target : {1, -1}) {
    std::optional<mc::Rational> last;
    for (const auto& rep : square_class_reps(e.ctx))
      for (long sign : {1L, -1L}) {
        const mc::Rational t = rep * sign;
        if (!last && mc::epsilon_EF(c * t, e.ctx) == Mu8::sign(target < 0)) last = t;
      }
    if (!last) throw Error(ErrorKind::NotFound, "no diagonal entry realizes the requested class");
    json gram = json::array();
    for (const auto& a : head) gram.push_back(codec::encode(a));
    gram.push_back(codec::encode(*last));
    in[target > 0 ? "plus" : "minus"] = gram;
  }
  return in;
}

void eval_dichotomy(const Env& e, const json& in, Checks& ck) {
  for (const char* key : {"plus", "minus"}) {
    std::vector<mc::Rational> gram;
    for (const auto& a : in.at(key)) gram.push_back(codec::rational(a));
    const mc::HermitianSpace v = mc::HermitianSpace::diagonal(gram, e.ctx.delta());
    ck.integer(std::string("dim V^") + (key[0] == 'p' ? "+" : "-"), e.m(), static_cast<long>(v.m()));
    ck.mu8(std::string("epsilon(V^") + (key[0] == 'p' ? "+" : "-") + ")", Mu8::sign(key[0] == 'm'),
           mc::epsilon_space(v, e.ctx));
  }
}

// ---- h-plus ----

json gen_hplus(const Env& e, mc::Rng& rng, long) {
  json ys = json::array();
  for (const auto& rep : square_class_reps(e.ctx)) {
    const mc::Rational t = mc::draw_nonzero_rational(rng, 6);
    ys.push_back(codec::encode(rep * t * t));
  }
  return {{"y", ys}};
}

/// Some g in GU(V) with nu(g) / y a square at p, found by bounded search.
bool exhibit_similitude(const Env& e, const mc::Rational& y) {
  if (e.m() % 2 == 0) {
    const mc::Rational rep = square_class_rep(y, e.ctx);
    for (long k = 0; k <= e.cfg.search_bound; ++k) {
      const mc::Rational target = k == 0 ? y : rep * k * k;
      try {
        const mc::SimilitudeElement g = mc::similitude_with_factor(e.v(), target, e.cfg.search_bound);
        return g.nu == target && mc::is_square_at_p(g.nu / y, e.ctx);
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::NotFound) throw;
      }
    }
    return false;
  }
  const long b = e.cfg.search_bound;
  for (long u = 0; u <= b; ++u)
    for (long w = -b; w <= b; ++w) {
      const mc::QuadExt z(u, w, e.ctx.delta());
      if (z.is_zero() || !mc::is_square_at_p(z.norm() / y, e.ctx)) continue;
      return scalar_similitude(e, z).nu == z.norm();
    }
  return false;
}

void eval_hplus(const Env& e, const json& in, Checks& ck) {
  long inside = 0;
  for (const auto& yj : in.at("y")) {
    const mc::Rational y = codec::rational(yj);
    const bool plus = mc::in_H_plus(mc::d_scale(e.w(), y), e.v(), e.ctx);
    inside += plus ? 1 : 0;
    if (e.m() % 2 != 0) {
      ck.holds("d(" + mc::to_string(y) + ") in H+ iff nu is a norm", plus == mc::is_local_norm(y, e.ctx));
    }
    if (plus) ck.holds("nu(G) meets the class of " + mc::to_string(y), exhibit_similitude(e, y));
  }
  ck.integer("square classes of nu(d(y)) in H+", e.m() % 2 == 0 ? 4 : 2, inside);
}

const std::vector<Suite>& registry() {
  static const std::vector<Suite> suites = {
      {"cocycle-identity", false, gen_cocycle, eval_cocycle},
      {"relation-3", true, gen_relation, eval_relation},
      {"lemma-31-1", false, gen_lemma1, eval_lemma1},
      {"lemma-31-2", false, gen_lemma2, eval_lemma2},
      {"prop-32-H", true, gen_pair_h, eval_prop32h},
      {"prop-32-G", false, gen_pair_g, eval_prop32g},
      {"prop-33", false, gen_prop33, eval_prop33},
      {"gamma-props", false, gen_gamma, eval_gamma},
      {"bruhat-roundtrip", false, gen_bruhat, eval_bruhat},
      {"space-dichotomy", false, gen_dichotomy, eval_dichotomy},
      {"h-plus", false, gen_hplus, eval_hplus},
  };
  return suites;
}

const Suite& find_suite(const std::string& name) {
  for (const auto& s : registry())
    if (name == s.name) return s;
  throw Error(ErrorKind::UnknownSuite, "unknown suite '" + name + "'");
}

/// Evaluates one instance; library errors count as a failed check.
void evaluate(const Suite& s, const Env& env, const json& inputs, Checks& ck) {
  try {
    s.evaluate(env, inputs, ck);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ChiUnavailable) throw;
    ck.fail("evaluation", "no error", std::string(mc::to_string(e.kind())) + ": " + e.what());
  }
}

void require_chi(const Suite& s, const Env& env) {
  if (s.needs_chi && !env.chi) {
    throw Error(ErrorKind::ChiUnavailable, std::string(s.name) + " needs chi: " + env.chi_error);
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : registry()) out.emplace_back(s.name);
    return out;
  }();
  return names;
}

bool is_known_suite(const std::string& name) {
  return std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
}

SuiteReport run_suite(const std::string& name, const RunConfig& cfg) {
  const Suite& suite = find_suite(name);
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  const Env env(cfg);
  require_chi(suite, env);

  SuiteReport report;
  report.suite = name;
  report.trials = cfg.trials;
  const bool search_witness = name == "prop-33" && env.m() % 2 != 0;
  bool witness_found = false;
  auto record = [&](Counterexample c) {
    ++report.failures;
    if (report.counterexamples.size() < cfg.dump_limit) report.counterexamples.push_back(std::move(c));
  };

  for (long i = 0; i < cfg.trials; ++i) {
    mc::Rng rng = trial_rng(cfg.seed, name, i);
    Checks ck;
    json inputs;
    try {
      inputs = suite.generate(env, rng, i);
    } catch (const Error& e) {
      ck.fail("generation", "no error", std::string(mc::to_string(e.kind())) + ": " + e.what());
    }
    if (!ck.failed()) evaluate(suite, env, inputs, ck);
    if (ck.witness && *ck.witness && i < kWitnessSamples) witness_found = true;
    if (ck.failed()) {
      record({name, i, ck.check(), inputs, ck.expected(), ck.actual(), to_json(cfg)});
    }
  }
  if (search_witness && !witness_found) {
    const long samples = std::min(cfg.trials, kWitnessSamples);
    record({name, -1, "witness with commutator != 1 for odd m", {{"samples", std::to_string(samples)}},
            "nonzero exponent", "0", to_json(cfg)});
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

ReplayResult replay(const Counterexample& cex) {
  const RunConfig cfg = config_from_json(cex.config);
  validate(cfg);
  const Suite& suite = find_suite(cex.suite);
  ReplayResult out;
  if (cex.trial < 0) {
    RunConfig one = cfg;
    one.suites = {cex.suite};
    for (const auto& c : run_suite(cex.suite, one).counterexamples) {
      if (c.trial < 0) {
        out = {true, c.check, c.expected, c.actual};
        return out;
      }
    }
    out.check = cex.check;
    return out;
  }
  const Env env(cfg);
  require_chi(suite, env);
  Checks ck;
  evaluate(suite, env, cex.inputs, ck);
  out.reproduced = ck.failed();
  out.check = ck.failed() ? ck.check() : cex.check;
  out.expected = ck.expected();
  out.actual = ck.actual();
  return out;
}

json to_json(const Counterexample& c) {
  return {{"suite", c.suite},     {"trial", std::to_string(c.trial)}, {"check", c.check}, {"inputs", c.inputs},
          {"expected", c.expected}, {"actual", c.actual},             {"config", c.config}};
}

Counterexample counterexample_from_json(const json& j) {
  try {
    return {j.at("suite").get<std::string>(), std::stol(j.at("trial").get<std::string>()),
            j.at("check").get<std::string>(), j.at("inputs"), j.at("expected").get<std::string>(),
            j.at("actual").get<std::string>(), j.at("config")};
  } catch (const std::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed counterexample: ") + e.what());
  }
}

json to_json(const SuiteReport& r, bool with_timing) {
  json cex = json::array();
  for (const auto& c : r.counterexamples) cex.push_back(to_json(c));
  json out = {{"suite", r.suite},
              {"trials", std::to_string(r.trials)},
              {"failures", std::to_string(r.failures)},
              {"counterexamples", cex}};
  if (with_timing) out["elapsed_ms"] = std::to_string(static_cast<long>(r.elapsed_ms));
  return out;
}

}  // namespace verifier
