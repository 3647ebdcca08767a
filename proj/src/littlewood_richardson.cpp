#include "schubert/littlewood_richardson.hpp"

#include <algorithm>
#include <stdexcept>

namespace schubert {

std::vector<Partition> partitions_of(int n, int max_part, int max_rows) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative size");
    if (max_part < 0 || max_part > n) max_part = n;
    if (max_rows < 0 || max_rows > n) max_rows = n;
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int left, int cap) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        if ((int)cur.size() == max_rows) return;
        for (int p = std::min(cap, left); p >= 1; --p) {
            cur.push_back(p);
            self(self, left - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, max_part);
    return out;
}

namespace {

void check_partition(const Partition& p, const char* who) {
    if (!is_partition(p))
        throw std::invalid_argument(std::string(who) + ": not a partition");
}

int part_at(const Partition& p, int i) { return i < (int)p.size() ? p[i] : 0; }

BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

// Fraction-free elimination, exact over the integers.
BigInt bigint_det(std::vector<std::vector<BigInt>> a) {
    int n = (int)a.size();
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { p = i; break; }
            if (p < 0) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

}  // namespace

long long lr_coefficient(const Partition& lambda, const Partition& mu,
                         const Partition& nu) {
    check_partition(lambda, "lr_coefficient");
    check_partition(mu, "lr_coefficient");
    check_partition(nu, "lr_coefficient");
    if (mu.size() > lambda.size()) return 0;
    for (size_t i = 0; i < mu.size(); ++i)
        if (mu[i] > lambda[i]) return 0;
    if (partition_weight(lambda) != partition_weight(mu) + partition_weight(nu))
        return 0;

    int rows = (int)lambda.size();
    int values = (int)nu.size();
    if (partition_weight(nu) == 0) return 1;  // empty skew diagram

    // boxes in reverse reading order: each row right to left, top to bottom;
    // lattice condition is a prefix property in exactly this order
    std::vector<std::pair<int, int>> order;
    for (int i = 0; i < rows; ++i)
        for (int j = part_at(lambda, i) - 1; j >= part_at(mu, i); --j)
            order.emplace_back(i, j);

    std::vector<std::vector<int>> grid(rows);
    for (int i = 0; i < rows; ++i) grid[i].assign(part_at(lambda, i), 0);
    std::vector<int> count(values + 1, 0);

    long long total = 0;
    auto rec = [&](auto&& self, size_t pos) -> void {
        if (pos == order.size()) {
            ++total;
            return;
        }
        auto [i, j] = order[pos];
        int lo = 1, hi = values;
        if (j + 1 < part_at(lambda, i)) hi = std::min(hi, grid[i][j + 1]);
        if (i > 0 && j >= part_at(mu, i - 1) && j < part_at(lambda, i - 1))
            lo = std::max(lo, grid[i - 1][j] + 1);
        for (int v = lo; v <= hi; ++v) {
            if (count[v] >= nu[v - 1]) continue;              // content bound
            if (v > 1 && count[v] >= count[v - 1]) continue;  // lattice word
            ++count[v];
            grid[i][j] = v;
            self(self, pos + 1);
            grid[i][j] = 0;
            --count[v];
        }
    };
    rec(rec, 0);
    return total;
}

std::map<Partition, long long> skew_weyl_decomposition(const SkewShape& sh) {
    validate_shape(sh);
    int n = sh.box_count();
    const Partition& lambda = sh.outer;
    Partition mu = sh.inner;
    int max_part = lambda.empty() ? 0 : lambda[0];
    std::map<Partition, long long> out;
    for (const Partition& nu : partitions_of(n, max_part, (int)lambda.size())) {
        long long c = lr_coefficient(lambda, mu, nu);
        if (c != 0) out.emplace(nu, c);
    }
    if (n == 0) out.emplace(Partition{}, 1);
    return out;
}

BigInt weyl_dimension(const SkewShape& sh, int n) {
    validate_shape(sh);
    if (n < 1) throw std::invalid_argument("weyl_dimension: n < 1");
    int rows = (int)sh.outer.size();
    std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(rows));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < rows; ++j) {
            // complete homogeneous h_k in n variables, all set to 1
            int k = sh.outer[i] - sh.inner_at(j) - i + j;
            a[i][j] = binomial((long long)n + k - 1, k);
        }
    return bigint_det(std::move(a));
}

BigInt weyl_dimension_by_enumeration(const SkewShape& sh, int n) {
    if (n < 1) throw std::invalid_argument("weyl_dimension_by_enumeration: n < 1");
    return (BigInt)enumerate_ssyt(sh, n).size();
}

std::map<WeightVector, long long> weyl_character(const SkewShape& sh, int n) {
    if (n < 1) throw std::invalid_argument("weyl_character: n < 1");
    std::map<WeightVector, long long> out;
    for (const SkewTableau& t : enumerate_ssyt(sh, n)) ++out[tableau_content(t, n)];
    return out;
}

}  // namespace schubert
