#include <gtest/gtest.h>

#include <random>

#include "hopfimage/builtins.hpp"
#include "hopfimage/error.hpp"
#include "hopfimage/free_maps.hpp"
#include "hopfimage/inner_faithful.hpp"

using namespace hopfimage;

namespace {

const FieldSpec Q = FieldSpec::rationals();

FPElement word(const TruncatedFreeProduct& fp, const std::vector<std::pair<int, int>>& letters) {
  FPElement x = fp.one();
  for (auto [f, i] : letters) x = fp.multiply_unbounded(x, fp.basis_element(f, i));
  return x;
}

std::string single(const TruncatedFreeProduct& fp, const FPElement& x) {
  if (x.size() != 1 || !x.begin()->second.is_one()) return "<not a word>";
  return fp.format(x.begin()->first);
}

TruncatedFreeProduct z2_z2(std::size_t bound) {
  auto z2 = builtin_hopf("group:Z2");
  return TruncatedFreeProduct({z2, z2}, bound);
}

// Delta applied on leg `leg` of a two-leg tensor.
std::map<std::vector<FPWord>, Scalar> coproduct_on_leg(const TruncatedFreeProduct& fp,
                                                       const FPTensor& t, std::size_t leg) {
  std::map<std::vector<FPWord>, Scalar> out;
  for (const auto& [k, c] : t) {
    FPElement w{{k[leg], Scalar(fp.field(), 1)}};
    for (const auto& [d, v] : free_coproduct(fp, w)) {
      std::vector<FPWord> key = leg == 0 ? std::vector<FPWord>{d[0], d[1], k[1]}
                                         : std::vector<FPWord>{k[0], d[0], d[1]};
      auto [it, fresh] = out.emplace(key, c * v);
      if (!fresh) it->second += c * v;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

}  // namespace

TEST(FreeProduct, DihedralBasis) {
  TruncatedFreeProduct fp = z2_z2(3);
  auto b = fp.basis();
  ASSERT_EQ(b.size(), 7u);
  std::vector<std::string> names;
  for (const auto& w : b) names.push_back(fp.format(w));
  EXPECT_EQ(names, (std::vector<std::string>{"1", "0:e1", "1:e1", "0:e1 1:e1", "1:e1 0:e1",
                                             "0:e1 1:e1 0:e1", "1:e1 0:e1 1:e1"}));
  for (std::size_t l = 0; l <= 6; ++l) EXPECT_EQ(z2_z2(l).basis_size(), 2 * l + 1);
  EXPECT_EQ(TruncatedFreeProduct({builtin_hopf("group:S3"), builtin_hopf("sweedler")}, 3).basis_size(),
            1u + 8 + 30 + 120);
}

TEST(FreeProduct, ReductionAtJunctions) {
  TruncatedFreeProduct fp = z2_z2(3);
  FPElement s = fp.basis_element(0, 1), t = fp.basis_element(1, 1);
  EXPECT_EQ(fp.multiply(s, s), fp.one());
  FPElement st = fp.multiply(s, t), ts = fp.multiply(t, s);
  EXPECT_EQ(fp.multiply(st, ts), fp.one());
  EXPECT_EQ(single(fp, fp.multiply(st, s)), "0:e1 1:e1 0:e1");
  try {
    (void)fp.multiply(st, st);
    FAIL();
  } catch (const HopfError& e) {
    EXPECT_EQ(e.code(), ErrorCode::TruncationOverflow);
  }
  EXPECT_EQ(support_length(fp.multiply_unbounded(st, st)), 4u);
  // A unit-line component splits off inside the Sweedler factor: x x = 0, g g = 1.
  TruncatedFreeProduct sw({builtin_hopf("sweedler"), builtin_hopf("group:Z2")}, 4);
  FPElement x = sw.basis_element(0, 1), g = sw.basis_element(0, 2), u = sw.basis_element(1, 1);
  EXPECT_TRUE(sw.multiply(x, x).empty());
  EXPECT_EQ(sw.multiply(sw.multiply(u, g), sw.multiply(g, u)), sw.one());
}

TEST(FreeProduct, AssociativityAndUnit) {
  std::mt19937_64 rng(41);
  TruncatedFreeProduct fp({builtin_hopf("group:S3"), builtin_hopf("sweedler")}, 6);
  for (int t = 0; t < 40; ++t) {
    FPElement a = random_element(fp, 2, 2, rng, false);
    FPElement b = random_element(fp, 2, 2, rng, false);
    FPElement c = random_element(fp, 2, 2, rng, false);
    EXPECT_EQ(fp.multiply(fp.multiply(a, b), c), fp.multiply(a, fp.multiply(b, c)));
    EXPECT_EQ(fp.multiply(fp.one(), a), a);
    EXPECT_EQ(fp.multiply(a, fp.one()), a);
  }
}

TEST(FreeProduct, Coordinates) {
  TruncatedFreeProduct fp = z2_z2(2);
  auto b = fp.basis();
  FPElement x = fp.one() - scaled(word(fp, {{1, 1}, {0, 1}}), Scalar(Q, 3));
  Vector c = fp.coordinates(x, b);
  ASSERT_EQ(c.size(), 5u);
  EXPECT_TRUE(c[0].is_one());
  EXPECT_EQ(c[4], Scalar(Q, -3));
  EXPECT_THROW(TruncatedFreeProduct({builtin_hopf("group:Z2"), builtin_hopf("group:Z2@F3")}, 2),
               HopfError);
}

TEST(FreeHopf, GroupLikeExamples) {
  TruncatedFreeProduct fp = z2_z2(3);
  FPElement s = fp.basis_element(0, 1), st = word(fp, {{0, 1}, {1, 1}});
  EXPECT_EQ(free_coproduct(fp, s), tensor_of({s, s}));
  EXPECT_EQ(free_coproduct(fp, st), tensor_of({st, st}));
  EXPECT_EQ(free_antipode(fp, st), word(fp, {{1, 1}, {0, 1}}));
  EXPECT_TRUE(free_counit(fp, st).is_one());
}

TEST(FreeHopf, AxiomsOnTruncation) {
  std::mt19937_64 rng(43);
  TruncatedFreeProduct fp({builtin_hopf("sweedler"), builtin_hopf("group:S3")}, 4);
  const std::vector<LegTarget> two{{&fp, false}, {&fp, false}};
  for (int t = 0; t < 25; ++t) {
    FPElement x = random_element(fp, 2, 3, rng, false);
    FPElement y = random_element(fp, 2, 2, rng, false);
    FPTensor dx = free_coproduct(fp, x);
    EXPECT_EQ(coproduct_on_leg(fp, dx, 0), coproduct_on_leg(fp, dx, 1));
    EXPECT_EQ(free_coproduct(fp, fp.multiply(x, y)), multiply_tensors(two, dx, free_coproduct(fp, y)));
    EXPECT_EQ(free_counit(fp, fp.multiply(x, y)), free_counit(fp, x) * free_counit(fp, y));
    FPElement eps = scaled(fp.one(), free_counit(fp, x));
    EXPECT_EQ(multiply_legs(fp, dx, true, false), eps);
    EXPECT_EQ(multiply_legs(fp, dx, false, true), eps);
    EXPECT_EQ(free_antipode(fp, fp.multiply(x, y)),
              fp.multiply(free_antipode(fp, y), free_antipode(fp, x)));
  }
}

TEST(FreeHopf, RandomElementsAreAugmented) {
  std::mt19937_64 rng(47);
  TruncatedFreeProduct fp({builtin_hopf("group:Z2xZ2"), builtin_hopf("sweedler")}, 6);
  for (int t = 0; t < 30; ++t) {
    FPElement x = random_element(fp, 3, 3, rng);
    EXPECT_FALSE(x.empty());
    EXPECT_TRUE(free_counit(fp, x).is_zero());
    EXPECT_LE(support_length(x), 3u);
  }
}

TEST(Z2Trick, EtaExamples) {
  MorphismFamily id = builtin_family("fam:id:group:Z2xZ2");
  Z2Extension ext(id, 6);
  const TruncatedFreeProduct& src = ext.source();
  FPElement sigma = ext.sigma();
  EXPECT_EQ(src.format(sigma.begin()->first), "0:e1");
  EXPECT_EQ(ext.eta(0, sigma).size(), 1u);

  FPElement a = src.basis_element(1, 1);
  FPElement sas = src.multiply(src.multiply(sigma, a), sigma);
  EXPECT_EQ(single(src, sas), "0:e1 1:e1 0:e1");
  EXPECT_EQ(ext.eta_word(parse_word("i0"), sas), tensor_of({sas}));
  EXPECT_EQ(ext.eta_word(parse_word("i0 i0*"), sigma), tensor_of({sigma, sigma}));

  // The counit family kills sigma x sigma for x in ker eps.
  Z2Extension eps(builtin_family("fam:eps:group:Z2xZ2"), 6);
  FPElement x = src.basis_element(1, 1) - src.one();
  FPElement sxs = src.multiply(src.multiply(sigma, x), sigma);
  EXPECT_TRUE(eps.eta(0, sxs).empty());
}

TEST(Z2Trick, CharactersSeparateSigmaConjugates) {
  MorphismFamily chi = builtin_family("fam:chi");
  Z2Extension ext(chi, 6);
  const TruncatedFreeProduct& src = ext.source();
  FPElement sigma = ext.sigma();
  auto conj = [&](const FPElement& v) { return src.multiply(src.multiply(sigma, v), sigma); };
  FPElement x0 = src.basis_element(1, 1) - src.one();
  FPElement x1 = src.basis_element(1, 2) - src.one();
  auto sep = z2_separation(ext, conj(x0) - conj(x1), 4);
  ASSERT_TRUE(sep.has_value());
  EXPECT_LE(sep->word.size(), 2u);
  EXPECT_FALSE(sep->image.empty());
}

TEST(Embeddings, SigmaConjugation) {
  TruncatedFreeProduct hh = z2_z2(2);
  Z2Extension ext(builtin_family("fam:id:group:Z2"), 5);
  const TruncatedFreeProduct& target = ext.source();
  EXPECT_EQ(single(target, embed_sigma(target, hh.basis_element(1, 1))), "0:e1 1:e1 0:e1");
  EXPECT_EQ(single(target, embed_sigma(target, hh.basis_element(0, 1))), "1:e1");
  EXPECT_EQ(single(target, embed_sigma(target, word(hh, {{0, 1}, {1, 1}}))), "1:e1 0:e1 1:e1 0:e1");
}

TEST(Embeddings, InjectiveAndMultiplicative) {
  std::mt19937_64 rng(53);
  auto h = builtin_hopf("group:Z2xZ2");
  auto k = builtin_hopf("sweedler");
  TruncatedFreeProduct hh({h, h}, 2);
  Z2Extension ext(builtin_family("fam:id:group:Z2xZ2"), 5);
  const auto hb = hh.basis();
  const auto tb = ext.source().basis();
  std::vector<Vector> images;
  for (const auto& w : hb) {
    images.push_back(ext.source().coordinates(embed_sigma(ext.source(), FPElement{{w, Scalar(Q, 1)}}), tb));
  }
  EXPECT_EQ(Subspace::span(Q, tb.size(), images).dim(), hb.size());

  TruncatedFreeProduct hk({h, k}, 2);
  auto hk_dom = share(tensor_hopf(*h, *k));
  TruncatedFreeProduct sq({hk_dom, hk_dom}, 2);
  const auto sb = sq.basis();
  images.clear();
  for (const auto& w : hk.basis()) {
    images.push_back(sq.coordinates(embed_tensor_square(hk, sq, FPElement{{w, Scalar(Q, 1)}}), sb));
  }
  EXPECT_EQ(Subspace::span(Q, sb.size(), images).dim(), hk.basis_size());

  for (int t = 0; t < 20; ++t) {
    FPElement a = random_element(hk, 1, 2, rng, false), b = random_element(hk, 1, 2, rng, false);
    EXPECT_EQ(embed_tensor_square(hk, sq, hk.multiply(a, b)),
              sq.multiply(embed_tensor_square(hk, sq, a), embed_tensor_square(hk, sq, b)));
    FPElement c = random_element(hh, 1, 2, rng, false), d = random_element(hh, 1, 2, rng, false);
    EXPECT_EQ(embed_sigma(ext.source(), hh.multiply(c, d)),
              ext.source().multiply(embed_sigma(ext.source(), c), embed_sigma(ext.source(), d)));
  }
  TruncatedFreeProduct hk3({h, k}, 3), sq3({hk_dom, hk_dom}, 3);
  EXPECT_EQ(single(sq3, embed_tensor_square(hk3, sq3, word(hk3, {{0, 1}, {1, 2}, {0, 3}}))),
            "0:e4 1:e2 0:e12");
}

TEST(Embeddings, TensorSquareRestrictsToFreeProductOfMaps) {
  for (const auto& [fa, fb] : std::vector<std::pair<const char*, const char*>>{
           {"morph:id:group:Z2", "morph:id:group:Z2"}, {"morph:q1", "morph:q2"},
           {"morph:sign-quot", "morph:sweedler-quot"}}) {
    AlgebraMorphism pi = builtin_morphism(fa), pj = builtin_morphism(fb);
    TruncatedFreeProduct hk({pi.source(), pj.source()}, 3);
    TruncatedFreeProduct ab({pi.target(), pj.target()}, 3);
    AlgebraMorphism pij = tensor_morphism(pi, pj);
    auto src_dom = share(tensor_hopf(pi.source().hopf(), pj.source().hopf()));
    auto tgt_dom = share(tensor_hopf(pi.target().hopf(), pj.target().hopf()));
    TruncatedFreeProduct sq_src({src_dom, src_dom}, 3), sq_tgt({tgt_dom, tgt_dom}, 3);
    for (const auto& w : hk.basis()) {
      if (w.size() > 2) continue;
      FPElement x{{w, Scalar(Q, 1)}};
      FPElement left = free_product_map(sq_tgt, {pij.matrix(), pij.matrix()},
                                        embed_tensor_square(hk, sq_src, x));
      FPElement right = embed_tensor_square(ab, sq_tgt,
                                            free_product_map(ab, {pi.matrix(), pj.matrix()}, x));
      EXPECT_EQ(left, right) << fa << " " << hk.format(w);
    }
  }
}

TEST(FreeSeparation, Examples) {
  MorphismFamily id = builtin_family("fam:id:group:Z2");
  TruncatedFreeProduct hk = z2_z2(6);
  FPElement s = hk.basis_element(0, 1);
  auto one_letter = free_separation_test(id, id, hk, s, 4);
  ASSERT_TRUE(one_letter.has_value());
  EXPECT_LE(one_letter->word.size(), 1u);

  FPElement x = word(hk, {{0, 1}, {1, 1}}) - word(hk, {{1, 1}, {0, 1}});
  auto sep = free_separation_test(id, id, hk, x, 3);
  ASSERT_TRUE(sep.has_value());
  EXPECT_FALSE(sep->image.empty());

  EXPECT_THROW((void)free_separation_test(id, id, hk, FPElement{}, 3), HopfError);
  EXPECT_THROW((void)free_separation_test(builtin_family("fam:eps:group:Z2"), id, hk, s, 3), HopfError);
}

TEST(FreeSeparation, SweedlerAgainstCharacters) {
  std::mt19937_64 rng(59);
  MorphismFamily fh = builtin_family("fam:sweedler-rep");
  MorphismFamily fk = builtin_family("fam:chi");
  TruncatedFreeProduct hk({fh.domain_ptr(), fk.domain_ptr()}, 6);
  for (int t = 0; t < 10; ++t) {
    FPElement x = random_element(hk, 3, 3, rng);
    auto sep = free_separation_test(fh, fk, hk, x, 4);
    ASSERT_TRUE(sep.has_value()) << t;
    EXPECT_FALSE(sep->image.empty());
  }
}
