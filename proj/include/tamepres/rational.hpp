#pragma once

#include <gmpxx.h>

namespace tamepres {

// gmpxx has no long long constructors; go through long, which is 64-bit
// on every platform this builds for.
static_assert(sizeof(long) >= 8, "needs 64-bit long");

inline mpz_class int_of(long long v) { return mpz_class(static_cast<long>(v)); }
inline mpq_class rat_of(long long v) { return mpq_class(static_cast<long>(v)); }

}  // namespace tamepres
