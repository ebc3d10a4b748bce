#include "qmat/gf.hpp"

#include <algorithm>
#include <map>

namespace qmat {

namespace {

// index <-> base-p digit vector (length e, constant term first)
std::vector<int> digits_of(int idx, int p, int e) {
  std::vector<int> d(e, 0);
  for (int i = 0; i < e; i++) { d[i] = idx % p; idx /= p; }
  return d;
}

int index_of(const std::vector<int>& d, int p) {
  int idx = 0;
  for (int i = (int)d.size() - 1; i >= 0; i--) idx = idx * p + d[i];
  return idx;
}

// multiply two degree-<e polynomials over F_p and reduce mod the monic
// modulus (degree e, constant first)
std::vector<int> polymul_mod(const std::vector<int>& a, const std::vector<int>& b,
                             const std::vector<int>& mod, int p, int e) {
  std::vector<int> prod(2 * e - 1, 0);
  for (int i = 0; i < e; i++)
    for (int j = 0; j < e; j++) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (int d = 2 * e - 2; d >= e; d--) {
    int c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    // x^d = x^{d-e} * (x^e mod modulus) = x^{d-e} * (-(mod[0..e-1]))
    for (int i = 0; i < e; i++)
      prod[d - e + i] = ((prod[d - e + i] - c * mod[i]) % p + p) % p;
  }
  prod.resize(e);
  return prod;
}

const std::map<int, std::vector<int>> kModuli = {
    {4, {1, 1, 1}},        // x^2 + x + 1
    {8, {1, 1, 0, 1}},     // x^3 + x + 1
    {9, {2, 2, 1}},        // x^2 + 2x + 2
    {16, {1, 1, 0, 0, 1}}  // x^4 + x + 1
};

}  // namespace

int Field::pow(int a, long k) const {
  if (k < 0) { a = inv(a); k = -k; }
  int r = 1;
  while (k) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

Field make_field(int q, int cap) {
  if (q < 2 || q > cap)
    throw std::invalid_argument("field size " + std::to_string(q) +
                                " outside supported range [2," + std::to_string(cap) + "]");
  int p = 2;
  while (q % p != 0) {
    p++;
    if (p * p > q) { p = q; break; }
  }
  int e = 0, t = q;
  while (t > 1) {
    if (t % p != 0) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    t /= p;
    e++;
  }

  Field F;
  F.q = q; F.p = p; F.e = e;
  F.add_t.resize(q * q); F.mul_t.resize(q * q);
  F.neg_t.resize(q); F.inv_t.assign(q, 0);

  if (e == 1) {
    for (int a = 0; a < q; a++)
      for (int b = 0; b < q; b++) {
        F.add_t[a * q + b] = (uint8_t)((a + b) % p);
        F.mul_t[a * q + b] = (uint8_t)((a * b) % p);
      }
  } else {
    auto it = kModuli.find(q);
    if (it == kModuli.end()) throw std::invalid_argument("no modulus table for q=" + std::to_string(q));
    std::vector<int> mod = it->second;
    F.modulus = mod;
    for (int a = 0; a < q; a++) {
      auto da = digits_of(a, p, e);
      for (int b = 0; b < q; b++) {
        auto db = digits_of(b, p, e);
        std::vector<int> s(e);
        for (int i = 0; i < e; i++) s[i] = (da[i] + db[i]) % p;
        F.add_t[a * q + b] = (uint8_t)index_of(s, p);
        F.mul_t[a * q + b] = (uint8_t)index_of(polymul_mod(da, db, mod, p, e), p);
      }
    }
  }
  for (int a = 0; a < q; a++) {
    for (int b = 0; b < q; b++) {
      if (F.add_t[a * q + b] == 0) F.neg_t[a] = (uint8_t)b;
      if (a != 0 && F.mul_t[a * q + b] == 1) F.inv_t[a] = (uint8_t)b;
    }
    if (a != 0 && F.inv_t[a] == 0) throw std::logic_error("modulus not irreducible");
  }
  return F;
}

mpz_class gaussian_binomial(int n, int k, int q) {
  if (k < 0 || k > n || n < 0) return 0;
  // q-Pascal: [n k] = [n-1 k-1] + q^k [n-1 k]
  std::vector<mpz_class> row(n + 1, 0);
  row[0] = 1;
  mpz_class qz = q;
  for (int i = 1; i <= n; i++) {
    std::vector<mpz_class> nxt(n + 1, 0);
    nxt[0] = 1;
    mpz_class qk = 1;
    for (int j = 1; j <= i; j++) {
      qk *= qz;
      nxt[j] = row[j - 1] + qk * row[j];
    }
    row = nxt;
  }
  return row[k];
}

mpz_class binom(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), (unsigned long)n, (unsigned long)k);
  return r;
}

mpz_class mpz_pow_int(long base, unsigned long exp) {
  mpz_class b = base, r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exp);
  return r;
}

std::pair<std::vector<mpz_class>, std::vector<mpz_class>>
q_binomial_theorem_lhs_rhs(int n, int q) {
  std::vector<mpz_class> lhs(n + 1, 0), rhs(n + 1, 0);
  lhs[0] = 1;
  mpz_class qk = 1;  // q^k
  for (int k = 0; k < n; k++) {
    for (int d = k + 1; d >= 1; d--) lhs[d] -= qk * lhs[d - 1];
    qk *= q;
  }
  for (int k = 0; k <= n; k++) {
    mpz_class term = mpz_pow_int(q, (unsigned long)(k * (k - 1) / 2)) * gaussian_binomial(n, k, q);
    rhs[k] = (k % 2 == 0) ? term : -term;
  }
  return {lhs, rhs};
}

int Embedding::from_coords(const std::vector<int>& c) const {
  int key = 0;
  for (int i = m - 1; i >= 0; i--) key = key * sub.q + c[i];
  // phi is a bijection onto all q^m coordinate rows; invert by scan cache
  for (int x = 0; x < sup.q; x++) {
    int k2 = 0;
    for (int i = m - 1; i >= 0; i--) k2 = k2 * sub.q + phi[x][i];
    if (k2 == key) return x;
  }
  throw std::logic_error("coordinate row not hit by phi");
}

Embedding make_embedding(const Field& sub, const Field& sup) {
  if (sub.p != sup.p) throw std::invalid_argument("incompatible characteristics");
  if (sup.e % sub.e != 0) throw std::invalid_argument("not a subfield: degrees");
  Embedding E;
  E.sub = sub; E.sup = sup; E.m = sup.e / sub.e;

  E.iota.assign(sub.q, -1);
  if (sub.e == 1) {
    for (int a = 0; a < sub.q; a++) E.iota[a] = a;  // prime subfield is literal
  } else {
    // the image of the sub-field generator is a root of sub.modulus in sup;
    // smallest root keeps the choice deterministic
    int root = -1;
    for (int r = 0; r < sup.q && root < 0; r++) {
      int v = 0;
      for (int i = (int)sub.modulus.size() - 1; i >= 0; i--)
        v = sup.add(sup.mul(v, r), sub.modulus[i] % sub.p);
      if (v == 0) root = r;
    }
    if (root < 0) throw std::logic_error("sub-field modulus has no root in big field");
    for (int a = 0; a < sub.q; a++) {
      // a = sum digits * x^i maps to sum digits * root^i
      int v = 0, aa = a;
      for (int i = 0; i < sub.e; i++) {
        int d = aa % sub.p; aa /= sub.p;
        v = sup.add(v, sup.mul(d, sup.pow(root, i)));
      }
      E.iota[a] = v;
    }
  }
  // verify iota is an injective ring hom
  std::vector<char> seen(sup.q, 0);
  for (int a = 0; a < sub.q; a++) {
    if (seen[E.iota[a]]) throw std::logic_error("iota not injective");
    seen[E.iota[a]] = 1;
    for (int b = 0; b < sub.q; b++) {
      if (E.iota[sub.add(a, b)] != sup.add(E.iota[a], E.iota[b]) ||
          E.iota[sub.mul(a, b)] != sup.mul(E.iota[a], E.iota[b]))
        throw std::logic_error("iota is not a homomorphism");
    }
  }

  // basis {1, beta, ..., beta^{m-1}}, beta = index-p element of sup;
  // tabulate sum iota(c_i) beta^i over all coordinate rows and demand a bijection
  int beta = (E.m == 1) ? 1 : sup.p;
  std::vector<int> bpow(E.m);
  for (int i = 0; i < E.m; i++) bpow[i] = sup.pow(beta, i);
  E.phi.assign(sup.q, {});
  std::vector<char> hit(sup.q, 0);
  std::vector<int> c(E.m, 0);
  long total = 1;
  for (int i = 0; i < E.m; i++) total *= sub.q;
  for (long t = 0; t < total; t++) {
    long tt = t;
    for (int i = 0; i < E.m; i++) { c[i] = (int)(tt % sub.q); tt /= sub.q; }
    int v = 0;
    for (int i = 0; i < E.m; i++) v = sup.add(v, sup.mul(E.iota[c[i]], bpow[i]));
    if (hit[v]) throw std::logic_error("powers of beta do not form a basis");
    hit[v] = 1;
    E.phi[v] = c;
  }
  return E;
}

}  // namespace qmat
