#ifndef GIE_FORMS_HPP
#define GIE_FORMS_HPP

#include <gie/matrix.hpp>

namespace gie::forms {

// Contraction forms of the n = 4 closed form. Matrices indexed by ordered
// pairs (6x6) are read as four-index arrays X_{abcd} = +-X_{{a,b},{c,d}},
// antisymmetric in each index pair and zero on repeated indices. Lower-case
// repeated indices are summed over 1..4. E denotes E^(2) for n = 4.

// Four-index entry of a 6x6 pair-indexed matrix (0-based generator indices).
Scalar pair_entry(const RatMatrix& x, int a, int b, int c, int d);

// F_a(X, Y)_{lm} = eps_{l r K} eps_{m s N} X_{sr} Y_{NK}; K, N run over
// ordered pairs.
RatMatrix f_a(const RatMatrix& x, const RatMatrix& y);

// F_b(X)_{LM} = eps_{L r k} X_{sr} eps_{s k M}.
RatMatrix f_b(const RatMatrix& x);

// F_c(X, Y, Z)_{lm} = (XE)_{ltur} Y_{sr} (EZ)_{stum}.
RatMatrix f_c(const RatMatrix& x, const RatMatrix& y, const RatMatrix& z);

// F_d1(X, Y, Z)_{lm} = (XE)_{lrtu} Y_{sr} (EZ)_{tsum}.
RatMatrix f_d1(const RatMatrix& x, const RatMatrix& y, const RatMatrix& z);

// F_d2(X, Y, Z)_{lm} = (XE)_{lutr} Y_{sr} (EZ)_{tusm}.
RatMatrix f_d2(const RatMatrix& x, const RatMatrix& y, const RatMatrix& z);

// F_e(Y1, X1, X2, Y2)_{LM} = E_{Lab} Y1_{ra} (E X1)_{rtbu} (X2 E)_{dtsu} Y2_{cs} E_{cdM}.
RatMatrix f_e(const RatMatrix& y1, const RatMatrix& x1, const RatMatrix& x2, const RatMatrix& y2);

// F_f(X, Y, Z)_{lm} = (XE)_{lcda} Y_{ba} (EZ)_{bdcm}.
RatMatrix f_f(const RatMatrix& x, const RatMatrix& y, const RatMatrix& z);

// F_g(X1, Y1, Y2, X2)_{LM} = E_{Lab} (E X1)_{arbt} Y1_{rs} Y2_{tu} (X2 E)_{csdu} E_{cdM}.
RatMatrix f_g(const RatMatrix& x1, const RatMatrix& y1, const RatMatrix& y2, const RatMatrix& x2);

} // namespace gie::forms

#endif
