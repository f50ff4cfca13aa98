#pragma once

#include <string>

namespace tamepres {

// Built-in spec files.
//
//   baumslag:   free abelian group of rank 2k, cyclic module annihilated
//               by 1 + x_i - y_i for each i
//   heisenberg: Heisenberg group of rank k, cyclic module annihilated by
//               1 + x_i - y_i and z - ell (ell > 1)
//   free:       free abelian group of rank k, free cyclic module
//               (no annihilators; negative control)
std::string example_spec(const std::string& name, int k, long long ell);

}  // namespace tamepres
