#include <doctest.h>

#include "helpers.hpp"
#include "nilrad/rng.hpp"
#include "nilrad/subspace.hpp"

using namespace nilrad;
using namespace testutil;

namespace {

Scalar rand_scalar(const Field& f, DetRng& rng) { return Scalar::from_int(f, rng.int_in(-9, 9)); }

Matrix rand_matrix(const Field& f, std::size_t r, std::size_t c, DetRng& rng) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rand_scalar(f, rng);
  return m;
}

}  // namespace

TEST_CASE("rational scalars stay canonical") {
  const Field f = Q();
  const Scalar a = Scalar::parse(f, "2/4");
  CHECK(a.str() == "1/2");
  CHECK(Scalar::parse(f, "-6/-4").str() == "3/2");
  CHECK(Scalar::parse(f, "0/7").str() == "0");
  CHECK((a + a).str() == "1");
  CHECK((a - a).str() == "0");
  CHECK(Scalar::parse(f, "3").str() == "3");
  CHECK_THROWS_AS(Scalar::parse(f, "x"), InputError);
}

TEST_CASE("prime field basics") {
  CHECK_THROWS_AS(Field::prime(6), InputError);
  const Field f = Fp(7);
  const Scalar a = Scalar::parse(f, "10");
  CHECK(a.str() == "3 mod 7");
  CHECK(Scalar::parse(f, "3 mod 7") == a);
  CHECK_THROWS_AS(Scalar::parse(f, "3 mod 5"), InputError);
  CHECK((sc(3, f) * sc(5, f)).str() == "1 mod 7");
  CHECK(sc(3, f).inverse().str() == "5 mod 7");
  CHECK((sc(-1, f)).str() == "6 mod 7");
}

TEST_CASE("field axioms hold on sampled triples") {
  for (const Field f : {Q(), Fp(5), Fp(97)}) {
    DetRng rng(DetRng::derive_key(11, {"axioms", f.name()}));
    for (int t = 0; t < 50; ++t) {
      const Scalar a = rand_scalar(f, rng), b = rand_scalar(f, rng), c = rand_scalar(f, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(f));
    }
  }
}

TEST_CASE("scalars refuse cross-field arithmetic") {
  CHECK_THROWS_AS(sc(1) + sc(1, Fp(5)), DimensionError);
}

TEST_CASE("bracket on worked examples") {
  const Field f = Q();
  SUBCASE("[A, A] = 0") {
    DetRng rng(DetRng::derive_key(3, {"aa"}));
    const Matrix a = rand_matrix(f, 4, 4, rng);
    CHECK(bracket(a, a).is_zero());
  }
  SUBCASE("elementary matrices in gl(4)") {
    const Matrix a = unit1(f, 4, 2, 3);
    const Matrix b = unit1(f, 4, 1, 2) + unit1(f, 4, 3, 4);
    CHECK(bracket(a, b) == -unit1(f, 4, 1, 3) + unit1(f, 4, 2, 4));
  }
  SUBCASE("E_{1,2} is an eigenvector of ad D for shape (1,1)") {
    const Shape sh = shape({1, 1});
    const Matrix d = build_D(sh, sc(0), sc(1));  // diag(0, -1)
    const Matrix e = unit1(f, 2, 1, 2);
    CHECK(bracket(d, e) == e);  // lambda = 1
  }
  SUBCASE("size mismatch is a dimension error") {
    CHECK_THROWS_AS(bracket(Matrix::zero(f, 2, 2), Matrix::zero(f, 3, 3)), DimensionError);
    CHECK_THROWS_AS(bracket(Matrix::zero(f, 2, 3), Matrix::zero(f, 2, 3)), DimensionError);
  }
}

TEST_CASE("jacobi identity on sampled triples") {
  for (const Field f : {Q(), Fp(5)}) {
    DetRng rng(DetRng::derive_key(17, {"jacobi", f.name()}));
    for (int t = 0; t < 10; ++t) {
      const Matrix a = rand_matrix(f, 4, 4, rng);
      const Matrix b = rand_matrix(f, 4, 4, rng);
      const Matrix c = rand_matrix(f, 4, 4, rng);
      const Matrix sum =
          bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
      CHECK(sum.is_zero());
    }
  }
}

TEST_CASE("rank on worked examples") {
  const Field f = Q();
  CHECK(rank(Matrix::zero(f, 3, 3)) == 0);
  CHECK(rank(mat(f, {{0, 1}, {0, 0}})) == 1);
  SUBCASE("matrix supported on one diagonal offset has rank = support size") {
    Matrix m(f, 5, 5);
    m.at(0, 2) = sc(3);
    m.at(2, 4) = sc(-7);
    CHECK(rank(m) == 2);
    m.at(1, 3) = Scalar::parse(f, "1/2");
    CHECK(rank(m) == 3);
  }
  SUBCASE("rational entries with denominators") {
    const Matrix m = mat(f, {{1, 2}, {2, 4}});
    CHECK(rank(m) == 1);
    Matrix h(f, 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        h.at(i, j) = Scalar::one(f) / Scalar::from_int(f, static_cast<long long>(i + j + 1));
    CHECK(rank(h) == 3);  // Hilbert matrix is nonsingular
  }
}

TEST_CASE("rank equals rank of transpose on samples") {
  for (const Field f : {Q(), Fp(3)}) {
    DetRng rng(DetRng::derive_key(23, {"rankT", f.name()}));
    for (int t = 0; t < 20; ++t) {
      const Matrix m = rand_matrix(f, 3 + t % 3, 4, rng);
      CHECK(rank(m) == rank(m.transpose()));
    }
  }
}

TEST_CASE("subspace insertion examples") {
  const Field f = Q();
  Subspace sp(f, 3);
  SUBCASE("inserting zero never grows") {
    CHECK_FALSE(sp.insert({sc(0), sc(0), sc(0)}));
    CHECK(sp.dim() == 0);
  }
  SUBCASE("e1 then e1+e2 gives pivots {0,1}") {
    CHECK(sp.insert({sc(1), sc(0), sc(0)}));
    CHECK(sp.insert({sc(1), sc(1), sc(0)}));
    CHECK(sp.dim() == 2);
    CHECK(sp.pivots() == std::vector<std::size_t>{0, 1});
    CHECK_FALSE(sp.insert({sc(5), sc(-3), sc(0)}));  // idempotent on the span
  }
  SUBCASE("all unit matrices fill the matrix space") {
    MatrixSubspace ms(f, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(ms.insert(Matrix::unit(f, 3, i, j)));
    CHECK(ms.dim() == 9);
  }
}

TEST_CASE("subspace membership examples") {
  const Field f = Q();
  Subspace sp(f, 3);
  CHECK(sp.contains({sc(0), sc(0), sc(0)}));
  sp.insert({sc(1), sc(0), sc(0)});
  CHECK_FALSE(sp.contains({sc(0), sc(1), sc(0)}));
  Subspace sp2(f, 3);
  sp2.insert({sc(1), sc(1), sc(0)});
  sp2.insert({sc(0), sc(1), sc(0)});
  CHECK(sp2.contains({sc(1), sc(0), sc(0)}));
}

TEST_CASE("subspace is canonical: insertion order cannot matter") {
  for (const Field f : {Q(), Fp(5)}) {
    DetRng rng(DetRng::derive_key(31, {"orders", f.name()}));
    std::vector<std::vector<Scalar>> vecs;
    for (int v = 0; v < 6; ++v) {
      std::vector<Scalar> x;
      for (int i = 0; i < 5; ++i) x.push_back(rand_scalar(f, rng));
      vecs.push_back(std::move(x));
    }
    Subspace forward(f, 5), backward(f, 5);
    for (const auto& v : vecs) forward.insert(v);
    for (auto it = vecs.rbegin(); it != vecs.rend(); ++it) backward.insert(*it);
    CHECK(forward == backward);
    CHECK(forward.dim() == backward.dim());
  }
}

TEST_CASE("vectorization orders coordinates by diagonal offset") {
  // d = 3: offsets -2,-1,-1,0,0,0,1,1,2 -> first coordinate is (2,0).
  CHECK(vec_index(3, 2, 0) == 0);
  CHECK(vec_index(3, 0, 0) == 3);
  CHECK(vec_index(3, 0, 1) == 6);
  CHECK(vec_index(3, 1, 2) == 7);
  CHECK(vec_index(3, 0, 2) == 8);
  for (std::size_t idx = 0; idx < 9; ++idx) {
    const auto [i, j] = vec_position(3, idx);
    CHECK(vec_index(3, i, j) == idx);
  }
  const Field f = Q();
  DetRng rng(DetRng::derive_key(41, {"vec"}));
  const Matrix m = rand_matrix(f, 4, 4, rng);
  CHECK(unvectorize(f, 4, vectorize(m)) == m);
}

TEST_CASE("growth guard reports scalar bit lengths") {
  const Field f = Q();
  Subspace sp(f, 2);
  sp.insert({Scalar::parse(f, "1048577"), sc(1)});
  CHECK(sp.max_bits() >= 21);
}
