#pragma once

#include <string>
#include <vector>

#include "vkl/switches.hpp"

namespace vkl {

/// One letter of a virtual braid word: sigma_i, sigma_i^-1 or the virtual
/// generator tau_i, with 1 <= i <= strands-1.
struct BraidLetter {
    enum class Kind { Sigma, SigmaInv, Tau };
    Kind kind;
    int index;   // 1-based

    bool operator==(const BraidLetter&) const = default;
};

/// A word in the virtual braid group VB_n, taken literally: no free
/// reduction or normal forms. All identities are tested on matrix images.
class VirtualBraidWord {
public:
    VirtualBraidWord(int strands, std::vector<BraidLetter> letters);

    /// Grammar: whitespace-separated tokens; `s<k>` = sigma_k,
    /// `-s<k>` = sigma_k^-1, `v<k>` = tau_k. The empty word is allowed.
    static VirtualBraidWord parse(const std::string& text, int strands);

    int strands() const { return strands_; }
    const std::vector<BraidLetter>& letters() const { return letters_; }
    bool is_classical() const;   // no tau letters

    std::string str() const;     // round-trips through parse

private:
    int strands_;
    std::vector<BraidLetter> letters_;
};

/// The representation rho(S, n): sigma_i maps to the switch block at strands
/// (i, i+1), sigma_i^-1 to its block inverse, tau_i to the transposition
/// block [[0,1],[1,0]]. Words map to products in word order.
RingMatrix represent(const VirtualBraidWord& w, const Switch& s);

/// M rho(S,n)(w) = rho(S',n)(w) M with (M, S') from burau_conjugator.
/// Requires a classical word.
bool check_burau_equivalence(const VirtualBraidWord& w, const Switch& s);

/// Left fixed row vector (P^{n-1}, ..., P, 1), P = A^-1 B^-1 A, of every
/// sigma block.
std::vector<RingElem> left_fixed_vector(const Switch& s, std::size_t strands);
/// Right fixed column vector (1, Q, ..., Q^{n-1}), Q = B^-1 (1-A).
std::vector<RingElem> right_fixed_vector(const Switch& s, std::size_t strands);

/// The two Q-like quantities of the theory, named apart: (1-A)(1-D) drives
/// the Burau conjugation, B^-1(1-A) is the fixed-column ratio.
RingElem burau_parameter(const Switch& s);
RingElem right_fixed_ratio(const Switch& s);

std::vector<RingElem> row_times_matrix(const std::vector<RingElem>& v, const RingMatrix& m);
std::vector<RingElem> matrix_times_col(const RingMatrix& m, const std::vector<RingElem>& v);

} // namespace vkl
