#pragma once

#include <array>
#include <map>

#include "uniserial/halfint.hpp"
#include "uniserial/surd.hpp"

namespace uniserial {

// Triangle condition: |j1-j2| <= j3 <= j1+j2 and j1+j2+j3 integral.
bool triangle(HalfInt j1, HalfInt j2, HalfInt j3);

// Triangle coefficient sqrt((j1+j2-j3)!(j1-j2+j3)!(-j1+j2+j3)!/(j1+j2+j3+1)!);
// zero when the triangle condition fails.
Surd delta_coeff(HalfInt j1, HalfInt j2, HalfInt j3);

struct CGKey {
    HalfInt j1, m1, j2, m2, j3, m3;
    auto operator<=>(const CGKey&) const = default;
};

// Memo table for coupling coefficients. One table per computation context;
// concurrent sweeps each use their own (see cg() below).
class CgTable {
  public:
    Surd cg(const CGKey& k);
    Surd cg(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j3, HalfInt m3) {
        return cg(CGKey{j1, m1, j2, m2, j3, m3});
    }
    size_t size() const { return memo_.size(); }

  private:
    std::map<CGKey, Surd> memo_;
};

// Coupling coefficient <j1 m1 j2 m2 | j3 m3>; single surd, exact.
// Uses a thread-local memo table.
Surd cg(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j3, HalfInt m3);
inline Surd cg(const CGKey& k) { return cg(k.j1, k.m1, k.j2, k.m2, k.j3, k.m3); }

// Closed forms for the four special couplings used by the module
// constructions, in integer highest-weight labels a, b and basis indices
// i (for V(a)) and j (for V(b)):
//   sum_top : third weight a+b,         <a/2,a/2-i; b/2,b/2-j | (a+b)/2,(a+b)/2-i-j>
//   diff_a  : third weight a-b,         <a/2,a/2-i; b/2,j-b/2 | (a-b)/2,(a-b)/2-i+j>
//   diff_b  : third weight b-a,         <a/2,i-a/2; b/2,b/2-j | (b-a)/2,(b-a)/2+i-j>
//   aligned : stretched third component <a/2,a/2-i; b/2,b/2-j | c/2,c/2>, c=a+b-2(i+j)
// DomainError when a factorial argument in the closed form is negative.
enum class CgSpecial { sum_top, diff_a, diff_b, aligned };

Surd cg_special(CgSpecial kind, int a, int b, int i, int j);

// The coupling key a given special form evaluates, for cross-checking.
CGKey cg_special_key(CgSpecial kind, int a, int b, int i, int j);

} // namespace uniserial
