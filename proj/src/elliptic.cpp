#include "s1web/elliptic.hpp"

// Header-only templates; this translation unit pins explicit instantiations
// for the two scalar types the library uses.

namespace s1web::ec {

template struct Point<Cpx>;
template struct Point<exact::GaussianRational>;

template Point<Cpx> add(const Point<Cpx>&, const Point<Cpx>&, const Cpx&);
template Point<exact::GaussianRational> add(const Point<exact::GaussianRational>&,
                                            const Point<exact::GaussianRational>&,
                                            const exact::GaussianRational&);
template Point<Cpx> dbl(const Point<Cpx>&, const Cpx&);
template Point<exact::GaussianRational> dbl(const Point<exact::GaussianRational>&,
                                            const exact::GaussianRational&);

}  // namespace s1web::ec
