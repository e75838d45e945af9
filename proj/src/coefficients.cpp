#include "catode/coefficients.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace catode {

std::string to_string(Family family) { return family == Family::a ? "a" : "b"; }

CoeffTable::CoeffTable(Family family, std::vector<std::vector<Integer>> rows)
    : family_(family), rows_(std::move(rows))
{
}

const std::vector<Integer>& CoeffTable::row(unsigned long N) const
{
    if (N == 0 || N > rows_.size()) {
        throw std::out_of_range("coefficient table has no row " + std::to_string(N));
    }
    return rows_[N - 1];
}

Integer CoeffTable::at(unsigned long i, unsigned long N) const
{
    const auto& r = row(N);
    if (family_ == Family::a) {
        if (i == 0 || i > r.size()) {
            throw std::out_of_range("a_" + std::to_string(i) + "(" + std::to_string(N) + ") out of range");
        }
        return r[i - 1];
    }
    return i < r.size() ? r[i] : Integer(0);
}

nlohmann::json CoeffTable::to_json() const
{
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t n = 0; n < rows_.size(); ++n) {
        nlohmann::json entries = nlohmann::json::array();
        for (const auto& v : rows_[n]) {
            entries.push_back(v.get_str());
        }
        rows.push_back({{"N", n + 1}, {"entries", std::move(entries)}});
    }
    return {{"family", to_string(family_)}, {"rows", std::move(rows)}};
}

CoeffTable CoeffTable::from_json(const nlohmann::json& j)
{
    const auto tag = j.at("family").get<std::string>();
    if (tag != "a" && tag != "b") {
        throw std::invalid_argument("unknown coefficient family '" + tag + "'");
    }
    std::vector<std::vector<Integer>> rows;
    for (const auto& r : j.at("rows")) {
        if (r.at("N").get<std::size_t>() != rows.size() + 1) {
            throw std::invalid_argument("coefficient rows must be consecutive from N = 1");
        }
        std::vector<Integer> entries;
        for (const auto& e : r.at("entries")) {
            entries.emplace_back(e.get<std::string>(), 10);
        }
        rows.push_back(std::move(entries));
    }
    return CoeffTable(tag == "a" ? Family::a : Family::b, std::move(rows));
}

CoeffTable a_table_recurrence(unsigned long Nmax)
{
    if (Nmax == 0) {
        throw std::invalid_argument("a-table needs Nmax >= 1");
    }
    std::vector<std::vector<Integer>> rows;
    rows.push_back({Integer(1)});
    for (unsigned long N = 1; N < Nmax; ++N) {
        const auto& prev = rows.back();  // a_1(N)..a_N(N) at prev[0..N-1]
        std::vector<Integer> next(N + 1);
        next[0] = 2 * (2 * static_cast<long>(N) - 1) * prev[0];
        for (unsigned long i = 2; i <= N; ++i) {
            next[i - 1] = Integer(i) * prev[i - 2] + 2 * (2 * static_cast<long>(N) - static_cast<long>(i)) * prev[i - 1];
        }
        next[N] = Integer(N + 1) * prev[N - 1];
        rows.push_back(std::move(next));
    }
    return CoeffTable(Family::a, std::move(rows));
}

namespace {

// Sum over k_l..k_1 given the indices above l sum to `above` and `budget`
// remains for the rest. Each level multiplies in
// (2N - 2*above - 2i - 1 + l; 2)_{k_l}; the innermost adds the double factorial.
Rational a_nested_sum(long N, long i, long l, long above, long budget)
{
    if (l == 0) {
        return Rational(double_factorial_odd(2 * N - 2 * above - 2 * i - 1));
    }
    const Rational base(2 * N - 2 * above - 2 * i - 1 + l);
    Rational total = 0;
    for (long k = 0; k <= budget; ++k) {
        const Rational factor = shifted_factorial(base, Rational(2), static_cast<unsigned long>(k));
        if (factor.is_zero()) {
            continue;
        }
        total += factor * a_nested_sum(N, i, l - 1, above + k, budget - k);
    }
    return total;
}

}  // namespace

Integer a_closed_form(unsigned long i, unsigned long N)
{
    if (i < 1 || i > N) {
        throw std::out_of_range("a_" + std::to_string(i) + "(" + std::to_string(N) + ") needs 1 <= i <= N");
    }
    const auto n = static_cast<long>(N);
    const auto ii = static_cast<long>(i);
    const Rational sum = a_nested_sum(n, ii, ii - 1, 0, n - ii);
    return (Rational(Integer(int_pow(2, N - i) * factorial(i))) * sum).to_integer();
}

namespace {

Integer s_number_memo(unsigned long N, unsigned long j, std::map<std::pair<unsigned long, unsigned long>, Integer>& memo)
{
    if (j == 1) {
        return Integer(N) * Integer(N + 1) / 2;
    }
    const auto key = std::make_pair(N, j);
    if (auto it = memo.find(key); it != memo.end()) {
        return it->second;
    }
    Integer total = 0;
    for (unsigned long k = 1; k <= N; ++k) {
        total += Integer(k) * s_number_memo(k + 1, j - 1, memo);
    }
    memo.emplace(key, total);
    return total;
}

}  // namespace

Integer s_number(unsigned long N, unsigned long j)
{
    if (N < 1 || j < 1) {
        throw std::out_of_range("S_{N,j} needs N >= 1 and j >= 1");
    }
    std::map<std::pair<unsigned long, unsigned long>, Integer> memo;
    return s_number_memo(N, j, memo);
}

CoeffTable b_table_recurrence(unsigned long Nmax)
{
    if (Nmax == 0) {
        throw std::invalid_argument("b-table needs Nmax >= 1");
    }
    std::vector<std::vector<Integer>> rows;
    rows.push_back({Integer(1)});
    for (unsigned long N = 1; N < Nmax; ++N) {
        const auto& prev = rows.back();
        auto prev_at = [&](unsigned long i) { return i < prev.size() ? prev[i] : Integer(0); };
        const unsigned long width = (N + 1) / 2;
        std::vector<Integer> next(width + 1);
        next[0] = prev_at(0);
        for (unsigned long i = 1; i <= width; ++i) {
            const long factor = -2 * (static_cast<long>(N) + 2 - 2 * static_cast<long>(i));
            next[i] = factor * prev_at(i - 1) + prev_at(i);
        }
        rows.push_back(std::move(next));
    }
    return CoeffTable(Family::b, std::move(rows));
}

Integer b_closed_form(unsigned long i, unsigned long N)
{
    if (N < 1 || i > N / 2) {
        throw std::out_of_range("b_" + std::to_string(i) + "(" + std::to_string(N) + ") needs 0 <= i <= N/2");
    }
    if (i == 0) {
        return 1;
    }
    Integer sign_pow = int_pow(2, i);
    if (i % 2 == 1) {
        sign_pow = -sign_pow;
    }
    return sign_pow * s_number(N + 1 - 2 * i, i);
}

CoeffTable closed_form_table(Family family, unsigned long Nmax)
{
    std::vector<std::vector<Integer>> rows;
    for (unsigned long N = 1; N <= Nmax; ++N) {
        std::vector<Integer> row;
        if (family == Family::a) {
            for (unsigned long i = 1; i <= N; ++i) {
                row.push_back(a_closed_form(i, N));
            }
        } else {
            for (unsigned long i = 0; i <= N / 2; ++i) {
                row.push_back(b_closed_form(i, N));
            }
        }
        rows.push_back(std::move(row));
    }
    return CoeffTable(family, std::move(rows));
}

}  // namespace catode
