// Built-in named arrangements used by the reproduction harness and tests.
#pragma once

#include <optional>
#include <string>

#include "toric/int_matrix.hpp"

namespace toric {

IntMatrix matrix_A();                     // rank 2, three hypertori
IntMatrix matrix_A_na(long n, long a);    // rank 2 family with multiplicity n
IntMatrix matrix_N();                     // rank 3 example
IntMatrix matrix_Nprime();                // same matroid data, different poset
IntMatrix matrix_Nsecond();               // totally unimodular quotient

/// Resolve "@A", "@A(n,a)", "@N", "@Nprime", "@Nsecond"; nullopt otherwise.
std::optional<IntMatrix> named_matrix(const std::string& name);

}  // namespace toric
