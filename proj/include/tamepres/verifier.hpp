#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "tamepres/presenter.hpp"
#include "tamepres/tameness.hpp"

namespace tamepres {

// Finite quotient of the semidirect product: group exponents reduced
// mod quot, module coefficients mod a prime, the module realized as the
// quotient of the free (Z/mod)Qbar-module on the generators by the row
// space of all annihilator and global relators.
class FiniteModel {
 public:
  FiniteModel(GroupSpec spec, ModuleSpec mod, long long coeff_mod,
              long long quot);

  const GroupSpec& group() const { return spec_; }
  const ModuleSpec& module_spec() const { return mod_; }
  long long coeff_mod() const { return m_; }
  long long quot() const { return n_; }
  long long group_order() const { return order_; }
  std::size_t algebra_dim() const { return static_cast<std::size_t>(order_); }
  std::size_t free_dim() const { return free_dim_; }
  std::size_t module_dim() const { return free_dim_ - rank_; }

  std::vector<long long> reduce(const GroupElement& g) const;
  std::size_t element_index(const std::vector<long long>& reduced) const;
  GroupElement lift(const std::vector<long long>& reduced) const;

  // Group state * t^e in the quotient.
  std::vector<long long> mul_generator(const std::vector<long long>& state,
                                       int gen, long long e) const;

  // Right action of t^e on a module vector (coordinate permutation).
  std::vector<std::uint32_t> act(const std::vector<std::uint32_t>& v, int gen,
                                 long long e) const;

  // Canonical reduction modulo the relator row space; zero iff the vector
  // lies in it.
  std::vector<std::uint32_t> reduce_module(std::vector<std::uint32_t> v) const;

  std::size_t coord(int mgen, std::size_t elt_index) const {
    return static_cast<std::size_t>(mgen) * algebra_dim() + elt_index;
  }

 private:
  GroupSpec spec_;
  ModuleSpec mod_;
  long long m_;
  long long n_;
  long long order_;
  std::size_t free_dim_;
  std::size_t rank_ = 0;
  std::vector<std::vector<std::uint32_t>> basis_;  // echelon rows
  std::vector<std::size_t> basis_lead_;
  mutable std::mutex perm_mutex_;
  mutable std::map<std::pair<int, long long>, std::vector<std::size_t>> perm_cache_;

  void build_row_space();
  void check_quotient_valid() const;
  const std::vector<std::size_t>& permutation(int gen, long long e) const;
};

FiniteModel build_finite_model(const GroupSpec& spec, const ModuleSpec& mod,
                               long long coeff_mod, long long quot);

// Exact check of the ring identity (1 - lambda) * pivot = sign * mu.
bool ring_identity_check(const GroupSpec& spec, const SelfExpression& se,
                         const RingElement& mu);

struct VerifyFailure {
  RelOrigin origin;
  std::size_t index;  // within the family
  std::vector<long long> group_residue;
  std::vector<std::uint32_t> module_residue;
};

struct VerifyReport {
  struct FamilyStat {
    RelOrigin origin;
    std::size_t count = 0;
    std::size_t passed = 0;
  };
  std::vector<FamilyStat> families;
  std::vector<VerifyFailure> failures;
  bool ok = false;
};

// Evaluates every relator in the finite semidirect product; module
// letters act as module elements, group letters as group elements.
VerifyReport verify_presentation(const Presentation& p, const FiniteModel& fm);

// Throws RelatorFails on the first recorded failure.
void require_verified(const VerifyReport& report);

std::string render_verify_report(const VerifyReport& report,
                                 const FiniteModel& fm);

}  // namespace tamepres
