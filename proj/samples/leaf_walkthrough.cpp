// Two G(2,4) points through the leaf report, then the unbounded [2,3,4,9] as a bundle.
#include <iostream>

#include "positroid/io.hpp"

using namespace positroid;

int main() {
  const rational_matrix points[] = {
      {{1, 2, 0, -1}, {0, 1, 3, 2}},
      {{1, 0, 0, 0}, {0, 1, 1, 0}},
  };
  for (const auto& entries : points) {
    const grassmann_point m(entries);
    const auto report = make_leaf_report(m);
    std::cout << "M = " << io::to_json(entries).dump() << "\n";
    std::cout << "  leaf  " << io::to_json(report).dump() << "\n";
    std::cout << "  form  " << io::to_json(bivector(m, bivector_method::chi_twisted).values).dump() << "\n";
  }

  const affine_permutation f(4, {2, 3, 4, 9});
  const auto b = bundle_of_perm(f);
  const auto flags = membership(b);
  std::cout << "f = " << io::to_json(f).dump() << "\n"
            << "  bundle    " << io::to_json(b).dump() << "\n"
            << "  end_dim   " << end_dim(b) << ", ell " << length(f) << ", p " << b.summands().size() << "\n"
            << "  U+ " << flags.in_u_plus << "  U++ " << flags.in_u_plus_plus << "\n";
}
