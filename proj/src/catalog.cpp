#include "toric/catalog.hpp"

#include <cstdio>

namespace toric {

IntMatrix matrix_A() { return IntMatrix{{1, 0, 1}, {0, 1, 1}}; }

IntMatrix matrix_A_na(long n, long a) { return IntMatrix{{1, a, a + 1}, {0, n, n}}; }

IntMatrix matrix_N() { return IntMatrix{{1, 1, 1, 3}, {0, 5, 0, 5}, {0, 0, 5, 5}}; }

IntMatrix matrix_Nprime() { return IntMatrix{{1, 4, 1, 6}, {0, 5, 0, 5}, {0, 0, 5, 5}}; }

IntMatrix matrix_Nsecond() { return IntMatrix{{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}}; }

std::optional<IntMatrix> named_matrix(const std::string& name) {
  if (name == "@A") return matrix_A();
  if (name == "@N") return matrix_N();
  if (name == "@Nprime") return matrix_Nprime();
  if (name == "@Nsecond") return matrix_Nsecond();
  long n, a;
  char tail;
  if (std::sscanf(name.c_str(), "@A(%ld,%ld%c", &n, &a, &tail) == 3 && tail == ')' &&
      name.back() == ')' && n >= 1)
    return matrix_A_na(n, a);
  return std::nullopt;
}

}  // namespace toric
