// Builds the three-point antipodal set for v = e2 and prints the points and
// the symmetries that certify it.

#include <iostream>

#include "triality/symspace.hpp"

int main() {
    using namespace triality;
    using S = QuadExt;

    const ImaginaryUnit<S> v(Octonion<S>::basis(2));
    const AntipodalSet<S> set = antipodal_set(v);

    std::cout << "s = " << to_string(set.s()) << "\n";
    const char* names[] = {"o", "p", "q"};
    for (std::size_t i = 0; i < 3; ++i)
        std::cout << names[i] << " = (" << to_string(set.points()[i].x()) << ", "
                  << to_string(set.points()[i].y()) << ")\n";

    for (const auto& c : set.certificates())
        std::cout << c.point << " fixed by the symmetries at " << c.basepoint << ": "
                  << (c.fixed ? "yes" : "no") << "\n";

    // Every other candidate (st, conj(s) conj(t)) with t^3 = 1 falls outside Fix(tau).
    const ScanReport<S> scan = maximality_scan(v, 200, 7);
    std::cout << "maximality scan accepted " << scan.accepted_count << " of " << scan.entries.size()
              << " candidates; exactly {o, p, q}: " << (scan.exact_three() ? "yes" : "no") << "\n";
    return scan.exact_three() ? 0 : 1;
}
