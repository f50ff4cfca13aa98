#include "tamepres/examples.hpp"

#include <sstream>

#include "tamepres/errors.hpp"

namespace tamepres {

namespace {

std::string baumslag_spec(int k) {
  if (k < 1) throw Error("baumslag needs k >= 1");
  std::ostringstream os;
  os << "# cyclic module over the free abelian group of rank " << 2 * k
     << ",\n# annihilated by 1 + x_i - y_i\n";
  os << "group {\n  layers 1\n  ranks " << 2 * k << "\n  gens";
  for (int i = 1; i <= k; ++i) os << " x" << i << " y" << i;
  os << "\n}\n\nmodule {\n  gens a\n";
  for (int i = 1; i <= k; ++i)
    os << "  ann layer=1 gen=a 1 + x" << i << " - y" << i << "\n";
  for (int i = 1; i <= k; ++i)
    os << "  rel gen=a 1 + x" << i << " - y" << i << "\n";
  os << "}\n";
  return os.str();
}

std::string heisenberg_spec(int k, long long ell) {
  if (k < 1) throw Error("heisenberg needs k >= 1");
  if (ell <= 1) throw Error("heisenberg needs ell > 1");
  std::ostringstream os;
  os << "# cyclic module over the Heisenberg group of rank " << k
     << ",\n# annihilated by 1 + x_i - y_i and z - " << ell << "\n";
  os << "group {\n  layers 2\n  ranks " << 2 * k << " 1\n  gens";
  for (int i = 1; i <= k; ++i) os << " x" << i << " y" << i;
  os << " z\n";
  for (int i = 1; i <= k; ++i)
    os << "  comm [x" << i << ", y" << i << "] = z\n";
  os << "}\n\nmodule {\n  gens a\n";
  for (int i = 1; i <= k; ++i)
    os << "  ann layer=1 gen=a 1 + x" << i << " - y" << i << "\n";
  os << "  ann layer=2 gen=a z - " << ell << "\n";
  for (int i = 1; i <= k; ++i)
    os << "  rel gen=a 1 + x" << i << " - y" << i << "\n";
  os << "  rel gen=a z - " << ell << "\n";
  os << "}\n";
  return os.str();
}

std::string free_spec(int n) {
  if (n < 1) throw Error("free needs k >= 1");
  std::ostringstream os;
  os << "# free cyclic module over the free abelian group of rank " << n
     << " (negative control)\n";
  os << "group {\n  layers 1\n  ranks " << n << "\n  gens";
  for (int i = 1; i <= n; ++i) os << " x" << i;
  os << "\n}\n\nmodule {\n  gens a\n}\n";
  return os.str();
}

}  // namespace

std::string example_spec(const std::string& name, int k, long long ell) {
  if (name == "baumslag") return baumslag_spec(k);
  if (name == "heisenberg") return heisenberg_spec(k, ell);
  if (name == "free") return free_spec(k);
  throw Error("unknown example: " + name +
              " (expected baumslag, heisenberg, or free)");
}

}  // namespace tamepres
