#include "vkl/braid.hpp"

#include <sstream>

namespace vkl {

VirtualBraidWord::VirtualBraidWord(int strands, std::vector<BraidLetter> letters)
    : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 1) throw PreconditionError("braid needs at least one strand");
    for (const BraidLetter& l : letters_)
        if (l.index < 1 || l.index > strands_ - 1)
            throw ParseError("letter index " + std::to_string(l.index) +
                             " out of range [1, " + std::to_string(strands_ - 1) + "]");
}

VirtualBraidWord VirtualBraidWord::parse(const std::string& text, int strands) {
    std::vector<BraidLetter> letters;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        BraidLetter l{};
        std::string body = tok;
        if (!body.empty() && body[0] == '-') {
            l.kind = BraidLetter::Kind::SigmaInv;
            body = body.substr(1);
            if (body.empty() || body[0] != 's')
                throw ParseError("unknown braid token '" + tok + "'");
        } else if (!body.empty() && body[0] == 's') {
            l.kind = BraidLetter::Kind::Sigma;
        } else if (!body.empty() && body[0] == 'v') {
            l.kind = BraidLetter::Kind::Tau;
        } else {
            throw ParseError("unknown braid token '" + tok + "'");
        }
        body = body.substr(1);
        if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("unknown braid token '" + tok + "'");
        l.index = std::stoi(body);
        letters.push_back(l);
    }
    return VirtualBraidWord(strands, std::move(letters));
}

bool VirtualBraidWord::is_classical() const {
    for (const BraidLetter& l : letters_)
        if (l.kind == BraidLetter::Kind::Tau) return false;
    return true;
}

std::string VirtualBraidWord::str() const {
    std::string out;
    for (const BraidLetter& l : letters_) {
        if (!out.empty()) out += " ";
        switch (l.kind) {
        case BraidLetter::Kind::Sigma: out += "s"; break;
        case BraidLetter::Kind::SigmaInv: out += "-s"; break;
        case BraidLetter::Kind::Tau: out += "v"; break;
        }
        out += std::to_string(l.index);
    }
    return out;
}

namespace {

// n x n block with the 2x2 matrix b at strands (i, i+1), identity elsewhere.
RingMatrix letter_block(const RingMatrix& b, int index, std::size_t n,
                        const RingElem& prototype) {
    RingMatrix m = ring_identity(n, prototype);
    std::size_t i = static_cast<std::size_t>(index - 1);
    m.at(i, i) = b.at(0, 0);
    m.at(i, i + 1) = b.at(0, 1);
    m.at(i + 1, i) = b.at(1, 0);
    m.at(i + 1, i + 1) = b.at(1, 1);
    return m;
}

RingMatrix twist_block(const RingElem& prototype) {
    RingMatrix t(2, 2, zero_like(prototype));
    t.at(0, 1) = one_like(prototype);
    t.at(1, 0) = one_like(prototype);
    return t;
}

} // namespace

RingMatrix represent(const VirtualBraidWord& w, const Switch& s) {
    std::size_t n = static_cast<std::size_t>(w.strands());
    RingMatrix sigma = switch_matrix(s);
    RingMatrix sigma_inv = switch_inverse_matrix(s);
    RingMatrix tau = twist_block(s.A);
    RingMatrix acc = ring_identity(n, s.A);
    // Letters act on label columns in application order: the first letter
    // of the word acts first, so its block sits rightmost in the product.
    for (const BraidLetter& l : w.letters()) {
        const RingMatrix* block = nullptr;
        switch (l.kind) {
        case BraidLetter::Kind::Sigma: block = &sigma; break;
        case BraidLetter::Kind::SigmaInv: block = &sigma_inv; break;
        case BraidLetter::Kind::Tau: block = &tau; break;
        }
        acc = ring_mul(letter_block(*block, l.index, n, s.A), acc);
    }
    return acc;
}

bool check_burau_equivalence(const VirtualBraidWord& w, const Switch& s) {
    if (!w.is_classical())
        throw PreconditionError(
            "Burau equivalence is a classical-braid statement; the word has virtual letters");
    BurauConjugation bc = burau_conjugator(s, static_cast<std::size_t>(w.strands()));
    RingMatrix lhs = ring_mul(bc.M, represent(w, s));
    RingMatrix rhs = ring_mul(represent(w, bc.burau), bc.M);
    return ring_equal(lhs, rhs);
}

RingElem burau_parameter(const Switch& s) {
    RingElem one = one_like(s.A);
    return (one - s.A) * (one - s.D);
}

RingElem right_fixed_ratio(const Switch& s) {
    return elem_inv(s.B) * (one_like(s.A) - s.A);
}

std::vector<RingElem> left_fixed_vector(const Switch& s, std::size_t strands) {
    RingElem P = elem_inv(s.A) * elem_inv(s.B) * s.A;
    std::vector<RingElem> v(strands, one_like(s.A));
    for (std::size_t k = 1; k < strands; ++k) v[strands - 1 - k] = P * v[strands - k];
    return v;
}

std::vector<RingElem> right_fixed_vector(const Switch& s, std::size_t strands) {
    RingElem Q = right_fixed_ratio(s);
    std::vector<RingElem> v(strands, one_like(s.A));
    for (std::size_t k = 1; k < strands; ++k) v[k] = Q * v[k - 1];
    return v;
}

std::vector<RingElem> row_times_matrix(const std::vector<RingElem>& v, const RingMatrix& m) {
    std::vector<RingElem> r(m.cols(), zero_like(v.front()));
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < v.size(); ++i) r[j] = r[j] + v[i] * m.at(i, j);
    return r;
}

std::vector<RingElem> matrix_times_col(const RingMatrix& m, const std::vector<RingElem>& v) {
    std::vector<RingElem> r(m.rows(), zero_like(v.front()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[i] = r[i] + m.at(i, j) * v[j];
    return r;
}

} // namespace vkl
