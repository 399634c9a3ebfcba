#include "jsdmix/mixture.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "jsdmix/kernels.hpp"

namespace jsdmix {
namespace {

Pmf mix_pair(const Pmf& a, const Pmf& b, double w) {
  std::vector<double> out(a.size());
  kernels::active_kernels().mix2(a.data(), b.data(), w, 1.0 - w, out.data(),
                                 a.size());
  for (double& v : out) {
    if (v <= 0.0) v = 0.0;
  }
  return Pmf(a.alphabet(), std::move(out));
}

bool overlaps(const Pmf& a, const Pmf& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0.0 && b[i] > 0.0) return true;
  }
  return false;
}

const AlphabetPtr& coin_alphabet() {
  static const AlphabetPtr coin = std::make_shared<const Alphabet>(
      std::vector<std::string>{"component", "base"});
  return coin;
}

}  // namespace

MixtureScenario::MixtureScenario(Pmf p_tilde_1, Pmf p_tilde_2, Pmf q,
                                 Weight lambda_1, Weight lambda_2)
    : p_tilde_1_(std::move(p_tilde_1)),
      p_tilde_2_(std::move(p_tilde_2)),
      q_(std::move(q)),
      lambda_1_(lambda_1.value()),
      lambda_2_(lambda_2.value()) {
  if (!same_alphabet(p_tilde_1_, p_tilde_2_) ||
      !same_alphabet(p_tilde_1_, q_)) {
    throw std::invalid_argument("scenario pmfs live on different alphabets");
  }
}

Pmf MixtureScenario::p1() const { return mix_pair(p_tilde_1_, q_, lambda_1_); }

Pmf MixtureScenario::p2() const { return mix_pair(p_tilde_2_, q_, lambda_2_); }

Pmf MixtureScenario::midpoint() const { return mix_pair(p1(), p2(), 0.5); }

double MixtureScenario::sjsd() const { return sym_js(p1(), p2()); }

bool MixtureScenario::supports_disjoint() const {
  return !overlaps(p_tilde_1_, q_) && !overlaps(p_tilde_2_, q_);
}

DisjointDecomposition MixtureScenario::disjoint_decomposition() const {
  if (!supports_disjoint()) {
    throw std::domain_error(
        "decomposition needs components disjoint from the base");
  }
  const Pmf coin1(coin_alphabet(), {lambda_1_, 1.0 - lambda_1_});
  const Pmf coin2(coin_alphabet(), {lambda_2_, 1.0 - lambda_2_});

  DisjointDecomposition d{};
  d.proportion_term = sym_js(coin1, coin2);
  const double mass = lambda_1_ + lambda_2_;
  // weight lambda_1 / (lambda_1 + lambda_2) is 0/0 at the origin; both
  // proportions zero means p1 == p2 == q, so the content term vanishes
  d.content_term =
      mass > 0.0
          ? (mass / 2.0) *
                js_divergence(p_tilde_1_, p_tilde_2_, Weight(lambda_1_ / mass))
          : 0.0;
  d.total = d.proportion_term + d.content_term;
  return d;
}

MixtureScenario MixtureScenario::with_lambdas(Weight lambda_1,
                                              Weight lambda_2) const {
  return MixtureScenario(p_tilde_1_, p_tilde_2_, q_, lambda_1, lambda_2);
}

EpsilonFamily::EpsilonFamily(double epsilon) : epsilon_(epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw std::domain_error("epsilon outside [0,1]");
  }
}

MixtureScenario EpsilonFamily::scenario(Weight lambda_1,
                                        Weight lambda_2) const {
  const AlphabetPtr& faces = six_faces();
  Pmf p_tilde_1(faces, {1.0, 0.0, 0.0, 0.0, 0.0, 0.0});
  Pmf p_tilde_2(faces, {1.0 - epsilon_, epsilon_, 0.0, 0.0, 0.0, 0.0});
  Pmf q(faces, {0.5, 0.4, 0.025, 0.025, 0.025, 0.025});
  return MixtureScenario(std::move(p_tilde_1), std::move(p_tilde_2),
                         std::move(q), lambda_1, lambda_2);
}

}  // namespace jsdmix
