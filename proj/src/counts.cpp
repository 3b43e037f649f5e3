#include "tautilt/counts.hpp"

#include <sstream>

namespace tautilt {

BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;  // exact at every step
  }
  return r;
}

BigInt catalan(long long n) { return binomial(2 * n, n) / (n + 1); }

namespace {

BigInt exact_div(BigInt num, const BigInt& den, const char* what) {
  if (den == 0 || num % den != 0)
    throw std::logic_error(std::string("closed form not integral: ") + what);
  return num / den;
}

BigInt factorial(long long n) {
  BigInt r = 1;
  for (long long i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

BigInt closed_form_linear_a(int n, int s) {
  return exact_div(BigInt(n - s + 1) * binomial(n + s, s), BigInt(n + 1),
                   "linear_a");
}

BigInt closed_form_a1_full(int n) {
  return exact_div(BigInt(5 * n - 6) * factorial(2 * n - 4),
                   factorial(n - 2) * factorial(n), "a1 full");
}

BigInt closed_form_d_full(int n) {
  return exact_div(BigInt(3 * n - 4) * binomial(2 * n - 2, n - 2),
                   BigInt(2 * n - 2), "d full");
}

namespace {

bool row_complete(const FamilyTable& t, int n) {
  auto it = t.find(n);
  return it != t.end() && it->second.size() == static_cast<size_t>(n) + 1;
}

long long entry(const FamilyTable& t, int n, int s) {
  return t.at(n).at(static_cast<size_t>(s));
}

void push(RecursionReport& rep, std::string name, BigInt lhs, BigInt rhs) {
  IdentityCheck c;
  c.name = std::move(name);
  c.ok = (lhs == rhs);
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  if (!c.ok) rep.all_ok = false;
  rep.checks.push_back(std::move(c));
}

std::string at(const char* fam, int n, int s) {
  std::ostringstream o;
  o << "a_" << s << "(" << fam << "_" << n << ")";
  return o.str();
}

}  // namespace

RecursionReport verify_recurrences(const FamilyTable& lambda,
                                   const FamilyTable& linear_a,
                                   const FamilyTable& d,
                                   const FamilyTable& a1) {
  RecursionReport rep;

  // linear_a: the two highest counts agree
  for (const auto& [n, row] : linear_a) {
    if (!row_complete(linear_a, n) || n < 1) continue;
    push(rep, at("A", n, n) + " = " + at("A", n, n - 1), row[n], row[n - 1]);
  }

  // lambda family
  for (const auto& [n, row] : lambda) {
    if (!row_complete(lambda, n) || n < 4) continue;
    (void)row;

    // full-rank drop, closed-form and table flavors
    push(rep,
         at("L", n, n) + " = " + at("L", n, n - 1) + " - C(2n-6,n-3)/(n-2)",
         entry(lambda, n, n),
         BigInt(entry(lambda, n, n - 1)) -
             exact_div(binomial(2 * n - 6, n - 3), BigInt(n - 2), "drop"));
    if (row_complete(linear_a, n - 3))
      push(rep, at("L", n, n) + " = " + at("L", n, n - 1) + " - " + at("A", n - 3, n - 3),
           entry(lambda, n, n),
           BigInt(entry(lambda, n, n - 1)) - entry(linear_a, n - 3, n - 3));

    if (!row_complete(lambda, n - 1)) continue;

    // columns that only shift: a_s = a_s(previous) + a_{s-1}(same)
    for (int s = 1; s <= n - 3; ++s)
      push(rep,
           at("L", n, s) + " = " + at("L", n - 1, s) + " + " + at("L", n, s - 1),
           entry(lambda, n, s),
           BigInt(entry(lambda, n - 1, s)) + entry(lambda, n, s - 1));

    // the band below the top: closed-form and table flavors
    push(rep,
         at("L", n, n - 2) + " = " + at("L", n - 1, n - 2) + " + " +
             at("L", n, n - 3) + " + C(2n-6,n-3)/(n-2)",
         entry(lambda, n, n - 2),
         BigInt(entry(lambda, n - 1, n - 2)) + entry(lambda, n, n - 3) +
             exact_div(binomial(2 * n - 6, n - 3), BigInt(n - 2), "band"));
    if (row_complete(linear_a, n - 3))
      push(rep,
           at("L", n, n - 2) + " = " + at("L", n - 1, n - 2) + " + " +
               at("L", n, n - 3) + " + " + at("A", n - 3, n - 3),
           entry(lambda, n, n - 2),
           BigInt(entry(lambda, n - 1, n - 2)) + entry(lambda, n, n - 3) +
               entry(linear_a, n - 3, n - 3));

    // one below full rank, closed-form flavor (the convolution runs over
    // smaller members of the same family)
    {
      bool have = true;
      for (int i = 4; i <= n - 1; ++i)
        if (!row_complete(lambda, i - 1)) have = false;
      if (have) {
        BigInt rhs = entry(lambda, n - 1, n - 1);
        rhs += exact_div(BigInt(3 * n - 7) * binomial(2 * n - 4, n - 3),
                         BigInt(2 * n - 4), "fork top");
        rhs += exact_div(BigInt(2) * (5 * n - 11) * factorial(2 * n - 6),
                         factorial(n - 3) * factorial(n - 1), "line top");
        for (int i = 4; i <= n - 1; ++i)
          rhs += BigInt(entry(lambda, i - 1, i - 1)) *
                 exact_div(binomial(2 * (n - i), n - i), BigInt(n - i + 1),
                           "catalan");
        push(rep,
             at("L", n, n - 1) + " = " + at("L", n - 1, n - 1) +
                 " + closed tops + convolution",
             entry(lambda, n, n - 1), rhs);
      }
    }

    // same identity with every ingredient read from enumerated tables
    if (n >= 5 && row_complete(d, n - 1) && row_complete(a1, n - 1)) {
      bool have = true;
      for (int i = 4; i <= n - 1; ++i) {
        if (!row_complete(lambda, i - 1)) have = false;
        if (!row_complete(linear_a, n - i)) have = false;
      }
      if (have) {
        BigInt rhs = entry(lambda, n - 1, n - 1);
        rhs += entry(d, n - 1, n - 1);
        rhs += BigInt(2) * entry(a1, n - 1, n - 1);
        for (int i = 4; i <= n - 1; ++i)
          rhs += BigInt(entry(lambda, i - 1, i - 1)) * entry(linear_a, n - i, n - i);
        push(rep,
             at("L", n, n - 1) + " = " + at("L", n - 1, n - 1) + " + " +
                 at("D", n - 1, n - 1) + " + 2*" + at("A1", n - 1, n - 1) +
                 " + convolution",
             entry(lambda, n, n - 1), rhs);
      }
    }
  }

  // a1 family
  for (const auto& [n, row] : a1) {
    if (!row_complete(a1, n) || n < 3) continue;
    (void)row;
    if (row_complete(a1, n - 1))
      for (int s = 1; s <= n - 2; ++s)
        push(rep,
             at("A1", n, s) + " = " + at("A1", n - 1, s) + " + " + at("A1", n, s - 1),
             entry(a1, n, s),
             BigInt(entry(a1, n - 1, s)) + entry(a1, n, s - 1));

    if (row_complete(linear_a, n - 1) && row_complete(linear_a, n - 2)) {
      push(rep,
           at("A1", n, n) + " = " + at("A", n - 1, n - 1) + " + " + at("A", n - 2, n - 2),
           entry(a1, n, n),
           BigInt(entry(linear_a, n - 1, n - 1)) + entry(linear_a, n - 2, n - 2));

      bool have = row_complete(a1, n - 1);
      for (int i = 3; i <= n - 1; ++i) {
        if (!row_complete(a1, i - 1)) have = false;
        if (!row_complete(linear_a, n - i)) have = false;
      }
      if (have) {
        BigInt rhs = entry(a1, n - 1, n - 1);
        rhs += entry(linear_a, n - 1, n - 1);
        rhs += entry(linear_a, n - 2, n - 2);
        for (int i = 3; i <= n - 1; ++i)
          rhs += BigInt(entry(a1, i - 1, i - 1)) * entry(linear_a, n - i, n - i);
        push(rep,
             at("A1", n, n - 1) + " = " + at("A1", n - 1, n - 1) + " + " +
                 at("A", n - 1, n - 1) + " + " + at("A", n - 2, n - 2) +
                 " + convolution",
             entry(a1, n, n - 1), rhs);
      }
    }
  }

  return rep;
}

std::string format_counts_row(const CountsRow& row) {
  std::ostringstream o;
  long long total = 0;
  for (size_t s = 0; s < row.size(); ++s) {
    if (s) o << ' ';
    o << row[s];
    total += row[s];
  }
  o << " | " << total;
  return o.str();
}

}  // namespace tautilt
