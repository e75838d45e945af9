#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "catode/exact_arith.hpp"

// Coefficients of the two Catalan ODE families:
//
//   forward:  C^(N)     = sum_{i=1}^{N}      a_i(N) (1-4t)^{-(2N-i)/2} C^{i+1}
//   inverse:  N! C^{N+1} = sum_{i=0}^{N/2} b_i(N) (1-4t)^{N/2-i}     C^{(N-i)}

namespace catode {

enum class Family { a, b };

std::string to_string(Family family);

/// Triangular integer table. Row N (1-based) of family a holds a_1(N)..a_N(N);
/// row N of family b holds b_0(N)..b_{floor(N/2)}(N).
class CoeffTable {
public:
    CoeffTable(Family family, std::vector<std::vector<Integer>> rows);

    Family family() const { return family_; }
    unsigned long max_N() const { return static_cast<unsigned long>(rows_.size()); }
    const std::vector<Integer>& row(unsigned long N) const;

    /// Entry by coefficient index as the families number them (a from 1, b from 0).
    /// Out-of-row b indices read as zero; anything else out of range throws.
    Integer at(unsigned long i, unsigned long N) const;

    /// {"family": "a"|"b", "rows": [{"N": int, "entries": [decimal-string...]}...]}
    nlohmann::json to_json() const;
    static CoeffTable from_json(const nlohmann::json& j);

private:
    Family family_;
    std::vector<std::vector<Integer>> rows_;
};

/// Rows 1..Nmax from a_1(1) = 1 and
///   a_1(N+1) = 2(2N-1) a_1(N),  a_{N+1}(N+1) = (N+1) a_N(N),
///   a_i(N+1) = i a_{i-1}(N) + 2(2N-i) a_i(N)  for 2 <= i <= N.
CoeffTable a_table_recurrence(unsigned long Nmax);

/// Closed-form a_i(N) as the nested multi-sum over k_1..k_{i-1} with
/// 2-shifted factorials and a trailing odd double factorial. Requires 1 <= i <= N.
Integer a_closed_form(unsigned long i, unsigned long N);

/// S_{N,1} = N(N+1)/2; S_{N,j} = sum_{k=1}^{N} k S_{k+1,j-1}.
Integer s_number(unsigned long N, unsigned long j);

/// Rows 1..Nmax from b_0 = 1 and b_i(N+1) = -2(N+2-2i) b_{i-1}(N) + b_i(N).
CoeffTable b_table_recurrence(unsigned long Nmax);

/// b_0(N) = 1, b_i(N) = (-2)^i S_{N+1-2i,i}. Requires 0 <= i <= floor(N/2).
Integer b_closed_form(unsigned long i, unsigned long N);

/// Table of closed-form values with the same shape as the recurrence table.
CoeffTable closed_form_table(Family family, unsigned long Nmax);

}  // namespace catode
