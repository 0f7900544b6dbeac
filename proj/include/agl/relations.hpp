#pragma once

#include "agl/generators.hpp"
#include "agl/matrix.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace agl {

/// A relation lhs = rhs over a ring R (SkewElement or Matrix), stored as the
/// residual lhs - rhs built from named generators. `depth` is the longest word
/// length in the residual; generic-module checks use it to pick interior vectors.
template <class R>
struct Relation {
  using Env = std::function<R(const std::string&)>;
  std::string id;
  std::string anchor;
  int depth = 2;
  std::function<R(const Env&)> residual;
};

struct CheckResult {
  std::string id;
  std::string anchor;
  bool passed = false;
  std::optional<SkewElement> witness;
  std::optional<Matrix> matrix_witness;
  double seconds = 0;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckResult> results;

  bool passed() const
  {
    for (const auto& r : results)
      if (!r.passed)
        return false;
    return true;
  }
  std::size_t failures() const
  {
    std::size_t n = 0;
    for (const auto& r : results)
      n += r.passed ? 0 : 1;
    return n;
  }
  void append(const VerificationReport& other) { results.insert(results.end(), other.results.begin(), other.results.end()); }
};

namespace detail {

template <class F>
CheckResult timed(std::string id, std::string anchor, F&& compute_residual)
{
  auto start = std::chrono::steady_clock::now();
  CheckResult r;
  r.id = std::move(id);
  r.anchor = std::move(anchor);
  SkewElement residual = compute_residual();
  r.passed = residual.is_zero();
  if (!r.passed)
    r.witness = std::move(residual);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline std::string pm(Sign s) { return std::string(1, sign_char(s)); }

}  // namespace detail

inline CheckResult verify_identity(const std::string& id, const std::string& anchor, const SkewElement& lhs,
                                   const SkewElement& rhs)
{
  return detail::timed(id, anchor, [&] { return lhs - rhs; });
}

inline constexpr Sign both_signs[] = {Sign::plus, Sign::minus};

/// Chevalley-Serre presentation of U(gl_n) in the generators X_k^{+-}, X_kk.
template <class R>
std::vector<Relation<R>> ugl_relations(int n)
{
  using Env = typename Relation<R>::Env;
  std::vector<Relation<R>> rels;
  auto X = [](int k, Sign s) { return "X" + std::to_string(k) + sign_char(s); };
  auto H = [](int k) { return "X" + std::to_string(k) + std::to_string(k); };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      rels.push_back({"cartan[" + H(i) + "," + H(j) + "]", "[" + H(i) + ", " + H(j) + "] = 0", 2,
                      [=](const Env& g) { return commutator(g(H(i)), g(H(j))); }});
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k < n; ++k)
      for (Sign s : both_signs) {
        const int w = (i == k ? 1 : 0) - (i == k + 1 ? 1 : 0);
        const int c = sign_value(s) * w;
        rels.push_back({"weight[" + H(i) + "," + X(k, s) + "]",
                        "[" + H(i) + ", " + X(k, s) + "] = " + std::to_string(c) + "*" + X(k, s), 2,
                        [=](const Env& g) { return commutator(g(H(i)), g(X(k, s))) - Rational(c) * g(X(k, s)); }});
      }
  for (int k = 1; k < n; ++k)
    for (int l = 1; l < n; ++l) {
      std::string rhs = k == l ? H(k) + " - " + H(k + 1) : "0";
      rels.push_back({"bracket[" + X(k, Sign::plus) + "," + X(l, Sign::minus) + "]",
                      "[" + X(k, Sign::plus) + ", " + X(l, Sign::minus) + "] = " + rhs, 2, [=](const Env& g) {
                        R r = commutator(g(X(k, Sign::plus)), g(X(l, Sign::minus)));
                        if (k == l)
                          r = r - (g(H(k)) - g(H(k + 1)));
                        return r;
                      }});
    }
  for (Sign s : both_signs)
    for (int k = 1; k < n; ++k)
      for (int l = 1; l < n; ++l) {
        if (k == l)
          continue;
        if (std::abs(k - l) == 1) {
          rels.push_back({"serre[" + X(k, s) + "," + X(l, s) + "]",
                          "[" + X(k, s) + ", [" + X(k, s) + ", " + X(l, s) + "]] = 0", 3,
                          [=](const Env& g) { return commutator(g(X(k, s)), commutator(g(X(k, s)), g(X(l, s)))); }});
        } else if (k < l) {
          rels.push_back({"far[" + X(k, s) + "," + X(l, s) + "]", "[" + X(k, s) + ", " + X(l, s) + "] = 0", 2,
                          [=](const Env& g) { return commutator(g(X(k, s)), g(X(l, s))); }});
        }
      }
  return rels;
}

/// V_k commutes with the copy of U(gl_k) (X_j^{+-} for j < k, X_jj for all j);
/// V_n commutes with every generator.
template <class R>
std::vector<Relation<R>> vandermonde_relations(int n)
{
  using Env = typename Relation<R>::Env;
  std::vector<Relation<R>> rels;
  for (int k = 2; k <= n; ++k) {
    const std::string v = "V" + std::to_string(k);
    std::vector<std::string> partners;
    for (int j = 1; j <= n; ++j)
      partners.push_back("X" + std::to_string(j) + std::to_string(j));
    for (int j = 1; j < n; ++j)
      if (j < k || k == n)
        for (Sign s : both_signs)
          partners.push_back("X" + std::to_string(j) + sign_char(s));
    for (int j = 2; j < k; ++j)
      partners.push_back("V" + std::to_string(j));
    for (const auto& p : partners)
      rels.push_back({"commute[" + v + "," + p + "]", "[" + v + ", " + p + "] = 0", 2,
                      [=](const Env& g) { return commutator(g(v), g(p)); }});
  }
  return rels;
}

/// Rows of the weight table alpha_ij(h), columns X11, X22, X33, V2, V3.
inline const std::vector<std::pair<std::string, std::vector<int>>>& alpha_table()
{
  static const std::vector<std::pair<std::string, std::vector<int>>> table = {
      {"11", {1, -1, 0, 0, 0}},
      {"21", {0, 1, -1, 1, 0}},
      {"22", {0, 1, -1, -1, 0}},
  };
  return table;
}
inline const std::vector<std::string>& cartan_names()
{
  static const std::vector<std::string> names = {"X11", "X22", "X33", "V2", "V3"};
  return names;
}

/// The nine relation families for A(gl_3) in the generators X11, X22, X33,
/// A11^{+-}, A21^{+-}, A22^{+-}, V2, V3.
template <class R>
std::vector<Relation<R>> agl3_relations()
{
  using Env = typename Relation<R>::Env;
  using detail::pm;
  std::vector<Relation<R>> rels;
  const std::vector<std::string> letters = {"X11", "X22", "X33", "A11+", "A11-", "A21+", "A21-",
                                            "A22+", "A22-", "V2", "V3"};
  auto A = [](const std::string& ij, Sign s) { return "A" + ij + pm(s); };

  for (const auto& u : letters)
    if (u != "V3")
      rels.push_back({"(i)[V3," + u + "]", "[V3, " + u + "] = 0", 2,
                      [=](const Env& g) { return commutator(g("V3"), g(u)); }});

  const auto& h = cartan_names();
  for (std::size_t a = 0; a < h.size(); ++a)
    for (std::size_t b = a + 1; b < h.size(); ++b)
      rels.push_back({"(ii)[" + h[a] + "," + h[b] + "]", "[" + h[a] + ", " + h[b] + "] = 0", 2,
                      [=](const Env& g) { return commutator(g(h[a]), g(h[b])); }});

  for (const auto& [ij, row] : alpha_table())
    for (std::size_t c = 0; c < h.size(); ++c)
      for (Sign s : both_signs) {
        const int coeff = sign_value(s) * row[c];
        const std::string a = A(ij, s);
        rels.push_back({"(iii)[" + h[c] + "," + a + "]",
                        "[" + h[c] + ", " + a + "] = " + std::to_string(coeff) + "*" + a, 2,
                        [=, hc = h[c]](const Env& g) { return commutator(g(hc), g(a)) - Rational(coeff) * g(a); }});
      }

  for (Sign s : both_signs) {
    const Sign t = s == Sign::plus ? Sign::minus : Sign::plus;
    rels.push_back({"(iv)[" + A("21", s) + "," + A("22", t) + "]", "[" + A("21", s) + ", " + A("22", t) + "] = 0", 2,
                    [=](const Env& g) { return commutator(g(A("21", s)), g(A("22", t))); }});
  }
  for (Sign s : both_signs) {
    const Sign t = s == Sign::plus ? Sign::minus : Sign::plus;
    for (const char* i : {"21", "22"})
      rels.push_back({"(v)[" + A("11", s) + "," + A(i, t) + "]", "[" + A("11", s) + ", " + A(i, t) + "] = 0", 2,
                      [=](const Env& g) { return commutator(g(A("11", s)), g(A(i, t))); }});
  }
  rels.push_back({"(vi)", "[A11+, A11-] = X11 - X22", 2,
                  [](const Env& g) { return commutator(g("A11+"), g("A11-")) - (g("X11") - g("X22")); }});
  rels.push_back({"(vii)", "[A21+, A21-] + [A22+, A22-] = X22 - X33", 2, [](const Env& g) {
                    return commutator(g("A21+"), g("A21-")) + commutator(g("A22+"), g("A22-")) -
                           (g("X22") - g("X33"));
                  }});
  for (Sign s : both_signs)
    for (const char* i : {"21", "22"}) {
      const std::string a = A("11", s);
      const std::string b = A(i, s);
      rels.push_back({"(viii)[" + a + "," + b + "]", "[" + a + ", [" + a + ", " + b + "]] = 0", 3,
                      [=](const Env& g) { return commutator(g(a), commutator(g(a), g(b))); }});
    }
  for (Sign s : both_signs) {
    const std::string a21 = A("21", s);
    const std::string a22 = A("22", s);
    rels.push_back({"(ix)" + pm(s), a22 + " V2 " + a21 + " = " + a21 + " V2 " + a22, 3,
                    [=](const Env& g) { return g(a22) * g("V2") * g(a21) - g(a21) * g("V2") * g(a22); }});
  }
  return rels;
}

/// (V2 + c) as a single linear factor.
inline LinearFactor v2_shifted(long c)
{
  return LinearFactor::difference(VarId::triangle(2, 1), VarId::triangle(2, 2), c).second;
}

inline Relation<SkewElement>::Env skew_env(const TriangleContext& ctx)
{
  auto cache = std::make_shared<std::map<std::string, SkewElement>>();
  return [ctx, cache](const std::string& name) {
    if (auto it = cache->find(name); it != cache->end())
      return it->second;
    auto u = lookup_element(ctx, name);
    if (!u)
      throw std::invalid_argument("unknown element '" + name + "'");
    return cache->emplace(name, *u).first->second;
  };
}

inline VerificationReport run_relations(const std::string& suite, const std::vector<Relation<SkewElement>>& rels,
                                        const Relation<SkewElement>::Env& env)
{
  VerificationReport report{suite, {}};
  for (const auto& rel : rels)
    report.results.push_back(detail::timed(rel.id, rel.anchor, [&] { return rel.residual(env); }));
  return report;
}

inline SkewElement gl2_center_combination(const TriangleContext& ctx, int constant)
{
  SkewElement c21 = gelfand_invariant_image(ctx, 2, 1);
  SkewElement c22 = gelfand_invariant_image(ctx, 2, 2);
  return -(c21 * c21) + Rational(2) * c22 + SkewElement(constant);
}

/// t = -e22 + e11 e21 - e11^2
inline Poly gwa_t()
{
  Poly e11 = elementary_symmetric(1, 1);
  return -elementary_symmetric(2, 2) + e11 * elementary_symmetric(2, 1) - e11 * e11;
}

inline VerificationReport suite_gl2(const TriangleContext& ctx)
{
  if (ctx.n() < 2)
    throw std::invalid_argument("suite_gl2 needs n >= 2");
  VerificationReport report{"gl2", {}};
  TriangleContext c2(2);
  const SkewElement xp = build_X(ctx, 1, Sign::plus);
  const SkewElement xm = build_X(ctx, 1, Sign::minus);
  const SkewElement v2 = build_V(ctx, 2);
  const std::vector<std::pair<std::string, SkewElement>> u2 = {
      {"X1+", xp}, {"X1-", xm}, {"X11", build_Xkk(ctx, 1)}, {"X22", build_Xkk(ctx, 2)}};

  for (const auto& [name, u] : u2)
    report.results.push_back(detail::timed("V2-commutes[" + name + "]", "[V2, " + name + "] = 0",
                                           [&] { return commutator(v2, u); }));

  report.results.push_back(
      verify_identity("c21-image", "phi(c21) = x21 + x22 + 1", gelfand_invariant_image(c2, 2, 1),
                      SkewElement(x(2, 1) + x(2, 2) + Poly(1))));
  report.results.push_back(verify_identity("c22-image", "phi(c22) = x21^2 + x22^2 + x21 + x22",
                                           gelfand_invariant_image(c2, 2, 2),
                                           SkewElement(x(2, 1).pow(2) + x(2, 2).pow(2) + x(2, 1) + x(2, 2))));
  report.results.push_back(verify_identity("V2-squared", "V2^2 = phi(-c21^2 + 2 c22 + 1)", v2 * v2,
                                           gl2_center_combination(c2, 1)));

  const Poly t = gwa_t();
  const ShiftVector sigma = delta(1, 1);
  report.results.push_back(verify_identity("gwa-yx", "X1- X1+ = -e22 + e11 e21 - e11^2", xm * xp, SkewElement(t)));
  report.results.push_back(
      verify_identity("gwa-xy", "X1+ X1- = sigma(t)", xp * xm, SkewElement(apply_shift(RatFunc(t), sigma))));
  const std::vector<std::pair<std::string, RatFunc>> gammas = {{"e11", RatFunc(elementary_symmetric(1, 1))},
                                                               {"e21", RatFunc(elementary_symmetric(2, 1))},
                                                               {"e22", RatFunc(elementary_symmetric(2, 2))},
                                                               {"V2", RatFunc(vandermonde(2))}};
  for (const auto& [name, g] : gammas) {
    report.results.push_back(verify_identity("gwa-x[" + name + "]", "X1+ " + name + " = sigma(" + name + ") X1+",
                                             xp * SkewElement(g), SkewElement(apply_shift(g, sigma)) * xp));
    report.results.push_back(verify_identity("gwa-y[" + name + "]",
                                             "X1- " + name + " = sigma^-1(" + name + ") X1-", xm * SkewElement(g),
                                             SkewElement(apply_shift(g, -sigma)) * xm));
  }

  const RowPermutation swap2 = RowPermutation::transposition(ctx.n(), 2, 1, 2);
  for (const auto& [name, u] : u2)
    report.results.push_back(verify_identity("swap2-fixes[" + name + "]", "(12)_2 " + name + " = " + name,
                                             group_act(swap2, u), u));
  report.results.push_back(verify_identity("swap2-negates[V2]", "(12)_2 V2 = -V2", group_act(swap2, v2), -v2));
  return report;
}

/// (d11 d22)^{-1} * 1/(x21 - x22), coefficient on the right.
inline SkewElement a11m_a22m_commutator()
{
  return SkewElement::right(-(delta(1, 1) + delta(2, 2)), RatFunc::reciprocal(v2_shifted(0)));
}

inline VerificationReport suite_gl3()
{
  TriangleContext ctx(3);
  auto env = skew_env(ctx);
  VerificationReport report = run_relations("gl3", agl3_relations<SkewElement>(), env);

  for (Sign s : both_signs) {
    const Rational sv = sign_value(s);
    const std::string p = detail::pm(s);
    report.results.push_back(verify_identity("V2-identity" + p, p + "[V2, X2" + p + "] = Xt2" + p,
                                             sv * commutator(env("V2"), env("X2" + p)), env("Xt2" + p)));
    report.results.push_back(verify_identity("A2-split" + p, "A21" + p + " + A22" + p + " = X2" + p,
                                             env("A21" + p) + env("A22" + p), env("X2" + p)));
    report.results.push_back(verify_identity("A21-half" + p, "A21" + p + " = (X2" + p + " + Xt2" + p + ")/2",
                                             env("A21" + p), Rational(1, 2) * (env("X2" + p) + env("Xt2" + p))));
  }
  report.results.push_back(verify_identity("[A11-,A22-]", "[A11-, A22-] = (d11 d22)^-1 (1/(x21 - x22))",
                                           commutator(env("A11-"), env("A22-")), a11m_a22m_commutator()));

  // U(gl_3) relations where every letter is a matrix-unit image
  MatrixUnitImages e(ctx);
  report.results.push_back(verify_identity("phi[E13,E31]", "[E13, E31] = E11 - E33", commutator(e(1, 3), e(3, 1)),
                                           e(1, 1) - e(3, 3)));
  report.results.push_back(
      verify_identity("phi(vi)", "[E12, E21] = E11 - E22", commutator(e(1, 2), e(2, 1)), e(1, 1) - e(2, 2)));
  report.results.push_back(
      verify_identity("phi(vii)", "[E23, E32] = E22 - E33", commutator(e(2, 3), e(3, 2)), e(2, 2) - e(3, 3)));
  report.results.push_back(verify_identity("phi[E12,E23]", "[E12, E23] = E13", commutator(e(1, 2), e(2, 3)), e(1, 3)));
  report.results.push_back(verify_identity("phi[E13,E32]", "[E13, E32] = E12", commutator(e(1, 3), e(3, 2)), e(1, 2)));
  report.results.push_back(
      verify_identity("phi[E21,E13]", "[E21, E13] = E23", commutator(e(2, 1), e(1, 3)), e(2, 3)));
  return report;
}

/// A21^+ A21^- as displayed:
/// -prod_i (x3i - x21 + 1)/(x22 - x21 + 1) * (x11 - x21)/(x22 - x21)
inline RatFunc example_product_display()
{
  Poly num(-1);
  for (int i = 1; i <= 3; ++i)
    num *= x(3, i) - x(2, 1) + Poly(1);
  num *= x(1, 1) - x(2, 1);
  Poly den = (x(2, 2) - x(2, 1) + Poly(1)) * (x(2, 2) - x(2, 1));
  RatFunc r(num);
  auto f1 = LinearFactor::recognize(x(2, 2) - x(2, 1) + Poly(1));
  auto f2 = LinearFactor::recognize(x(2, 2) - x(2, 1));
  return r * RatFunc::from_parts(Poly(1), {f1->second, f2->second}, Rational(1 / (f1->first * f2->first))).normalize();
}

/// The fourfold product in displayed form: the two-factor display times its
/// row-2 mirror image, with the leading minus signs cancelling.
inline RatFunc fourfold_product_display()
{
  RatFunc first = example_product_display();
  RatFunc second = apply_permutation(first, RowPermutation::transposition(3, 2, 1, 2));
  return first * second;
}

inline VerificationReport suite_invariants_and_counterexamples()
{
  TriangleContext ctx(3);
  auto env = skew_env(ctx);
  VerificationReport report{"invariants", {}};
  const SkewElement prod = env("A21+") * env("A21-");
  report.results.push_back(verify_identity(
      "example-product", "A21+ A21- = -prod(x3i - x21 + 1)/(x22 - x21 + 1) * (x11 - x21)/(x22 - x21)", prod,
      SkewElement(example_product_display())));

  const SkewElement four = env("A21+") * env("A21-") * env("A22+") * env("A22-");
  report.results.push_back(verify_identity("fourfold-product", "A21+ A21- A22+ A22- = displayed product", four,
                                           SkewElement(fourfold_product_display())));

  auto flag = [&](std::string id, std::string anchor, bool ok) {
    CheckResult r;
    r.id = std::move(id);
    r.anchor = std::move(anchor);
    r.passed = ok;
    report.results.push_back(std::move(r));
  };
  flag("fourfold-S-invariant", "fourfold product fixed by every row transposition",
       is_invariant(four, 3, GroupKind::symmetric));
  flag("fourfold-degree-zero", "fourfold product has support {e}", four.support() == std::set<ShiftVector>{ShiftVector{}});
  flag("fourfold-denominator", "fourfold product has a nonempty reduced denominator",
       !four.coefficient(ShiftVector{}).den().empty());
  flag("fourfold-not-in-Gamma", "fourfold product lies outside Gamma", !membership(ctx, four, Membership::gamma));
  flag("example-product-not-in-GammaTilde", "A21+ A21- lies outside GammaTilde",
       !membership(ctx, prod, Membership::gamma_tilde));
  flag("example-product-localized", "A21+ A21- lies in the localization S^-1 Lambda",
       prod.is_degree_zero() && [&] {
         const RatFunc coeff = prod.coefficient(ShiftVector{});
         for (const auto& [f, e] : coeff.den())
           if (!f.b() || f.a().row != 2 || f.b()->row != 2)
             return false;
         return true;
       }());
  return report;
}

inline VerificationReport suite_localized()
{
  TriangleContext ctx(3);
  auto env = skew_env(ctx);
  VerificationReport report{"localized", {}};
  const RatFunc v2(vandermonde(2));
  for (Sign s : both_signs) {
    const long sv = sign_value(s);
    const std::string p = detail::pm(s);
    const SkewElement a21 = env("A21" + p);
    const SkewElement a22 = env("A22" + p);
    const SkewElement prod = a21 * a22;
    const RatFunc prime_coeff = RatFunc(2 * sv) * RatFunc::reciprocal(v2_shifted(sv));
    const RatFunc second_coeff = (v2 - RatFunc(sv)) * RatFunc::reciprocal(v2_shifted(sv));
    report.results.push_back(verify_identity("(ix)'" + p,
                                             "[A21" + p + ", A22" + p + "] = (" + std::to_string(2 * sv) + "/(V2 " +
                                                 p + " 1)) A21" + p + " A22" + p,
                                             commutator(a21, a22), SkewElement(prime_coeff) * prod));
    report.results.push_back(verify_identity("(ix)''" + p,
                                             "A22" + p + " A21" + p + " = ((V2 " + (sv > 0 ? "-" : "+") +
                                                 " 1)/(V2 " + p + " 1)) A21" + p + " A22" + p,
                                             a22 * a21, SkewElement(second_coeff) * prod));
    report.results.push_back(verify_identity("(ix)'<=>(ix)''" + p, "1 - (V2 -+ 1)/(V2 +- 1) = +-2/(V2 +- 1)",
                                             SkewElement(RatFunc(1) - second_coeff), SkewElement(prime_coeff)));
  }
  return report;
}

inline VerificationReport run_suite(const std::string& name, int n)
{
  if (name == "gl2")
    return suite_gl2(TriangleContext(n));
  if (name == "gl3" || name == "localized" || name == "invariants") {
    if (n != 3)
      throw std::invalid_argument("suite '" + name + "' requires --n 3");
    if (name == "gl3")
      return suite_gl3();
    if (name == "localized")
      return suite_localized();
    return suite_invariants_and_counterexamples();
  }
  if (name == "all") {
    VerificationReport all{"all", {}};
    all.append(suite_gl2(TriangleContext(n)));
    if (n == 3) {
      all.append(suite_gl3());
      all.append(suite_invariants_and_counterexamples());
      all.append(suite_localized());
    }
    return all;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace agl
