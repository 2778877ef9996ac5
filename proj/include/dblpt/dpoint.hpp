#pragma once

#include <vector>

#include "dblpt/mo.hpp"
#include "dblpt/qmo.hpp"

namespace dblpt {

/// Elements of H_{2k+2} D_2 MO(k), viewed as height-2 classes of QMO(k).
using D2Class = QClass;

/// Basis of H_{2k+2} D_2 MO(k): the height-2 part of qmo_basis(k, 2k+2).
/// For k >= 2 this is checked against the closed form and a mismatch throws
/// std::logic_error.
std::vector<QMonomial> d2_basis(int k);

/// For k >= 2: e1^k*e1^{k-1}e3, e1^k*e1^{k-2}e2^2, e1^{k-1}e2*e1^{k-1}e2,
/// Q^{k+2}(e1^k). Throws std::invalid_argument for k < 2.
std::vector<QMonomial> d2_closed_form(int k);

/// Named elements of H_{2k+2}QMO(k) used throughout the double-point layer.
struct D2Elements {
  QMonomial e13;     // e1^k * e1^{k-1}e3
  QMonomial e22;     // e1^k * e1^{k-2}e2^2
  QMonomial square;  // e1^{k-1}e2 * e1^{k-1}e2
  QMonomial q_top;   // Q^{k+2}(e1^k)
};
/// Requires k >= 2.
D2Elements d2_elements(int k);

/// xi_*(Q^{k+2} e1^k) by the sum over m_1 + ... + m_k = 2 (m_j >= 0) of
/// prod_j C(m_j - 1, 0) e1 e_{m_j + 1}.
MOClass xi_q_image(int k);

/// The pushforward xi_* : H_{2k+2} D_2 MO(k) -> H_{2k+2} MO(2k). Products
/// of two height-1 monomials merge; Q^{k+2}(e1^k) maps by xi_q_image. Any
/// other term throws DomainError.
MOClass xi_push(const D2Class& c, int k);

/// e1^{2k-1} e3, the only non-zero stably spherical class in H_{2k+2} MO(2k).
EMonomial odd_marker(int k);

enum class Parity { Even, Odd };

/// Odd iff xi_push(c) has e1^{2k-1}e3 coefficient 1.
Parity parity_decision(const D2Class& c, int k);

const char* to_string(Parity p);

}  // namespace dblpt
