#ifndef DCAT_DOUBLE_MODULE_HPP
#define DCAT_DOUBLE_MODULE_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dcat/action.hpp"
#include "dcat/category.hpp"
#include "dcat/diagnostics.hpp"
#include "dcat/functor.hpp"

namespace dcat {

// The central structure of this library: four finite categories over one
// object set,
//
//     M --mu-->  P  <--phi-- H        and        V --psi--> P,
//
// with M totally intransitive, all three morphisms the identity on objects,
// and right actions of H and V on M. The two module laws say that the
// actions are intertwined with the projections to P,
//
//   (mu m)(phi d) = (phi d)(mu m^d)      and likewise for V,
//
// and that the two ways of transporting m past a mixed word agree up to the
// square content q:  m^(yf) q = q m^(dz)  whenever yfq = dz holds in P.
struct DoubleModule {
  std::string name;
  FiniteCategory m_cat;  // M
  FiniteCategory h_cat;  // H
  FiniteCategory v_cat;  // V
  FiniteCategory p_cat;  // P
  IdObjFunctor mu;       // M -> P
  IdObjFunctor phi;      // H -> P
  IdObjFunctor psi;      // V -> P
  RightAction act_h;     // action of H on M
  RightAction act_v;     // action of V on M
};

// Which component category a letter of a mixed word is drawn from.
enum class Component { M, H, V };

struct EvalLetter {
  Component part;
  ArrowId arrow;
};

// A formal word in the free product H * V, used to iterate the two actions:
// m^(dz) means (m^d)^z, applied left to right.
enum class WordSide { horizontal, vertical };

struct FormalLetter {
  WordSide side;
  ArrowId arrow;
};

using FormalWord = std::vector<FormalLetter>;

// Applies mu/phi/psi letterwise and composes the images in P, certifying
// that consecutive images chain (the "makes sense" half of an equation
// evaluated in P). An empty word needs an anchor object and evaluates to its
// identity. Throws NotComposableInPError on the first offending pair,
// UnknownArrowError / UnknownObjectError on dangling ids.
ArrowId evaluate_in_p(const DoubleModule& dm, std::span<const EvalLetter> word,
                      const std::optional<ObjectId>& at = std::nullopt);

// Left-to-right fold of the two actions over a formal word. Throws
// TypingError when the word does not chain or starts away from m.
ArrowId act_formal_word(const DoubleModule& dm, const ArrowId& m,
                        const FormalWord& word);

// Full validation: each component category, totally intransitive M, the
// shared object set, the three functors, both actions, and then the two
// module laws quantified exhaustively, with "0 instances" surfaced as
// vacuous rather than as a pass. Law checks are skipped when the structural
// phase already failed (their tables could not be trusted).
DiagnosticReport validate_double_module(const DoubleModule& dm);

// Crossed-module laws for mu: M -> P with an action of P on M, written
// right-action style:  mu(m^p) = p^-1 (mu m) p  and  m^(mu n) = n^-1 m n.
DiagnosticReport check_crossed_module(const FiniteCategory& m_cat,
                                      const FiniteCategory& p_cat,
                                      const IdObjFunctor& mu,
                                      const RightAction& action);

// Semicore data checks: eta an inclusion of a totally intransitive
// subgroupoid with mu = eta;phi, (mu, act_p) a crossed module, the
// compatibility law h^-1 m h = m^(phi h) wherever the conjugate is defined,
// plus its consequences (M normal in H, Ker phi acting trivially on M).
DiagnosticReport check_semicore(const FiniteCategory& m_cat,
                                const FiniteCategory& h_cat,
                                const FiniteCategory& p_cat,
                                const IdObjFunctor& eta, const IdObjFunctor& mu,
                                const IdObjFunctor& phi,
                                const RightAction& act_p);

// -- builders ---------------------------------------------------------------

// M has only identities, so squares downstream are exactly the shells that
// commute in P. Structural misuse (mismatched objects, non-functorial phi)
// is surfaced by validate_double_module, not thrown here.
DoubleModule from_commuting_shell(const FiniteCategory& h_cat,
                                  const FiniteCategory& v_cat,
                                  const FiniteCategory& p_cat,
                                  const IdObjFunctor& phi,
                                  const IdObjFunctor& psi);

// V := P with psi the identity. When the result validates, (mu, act_p) is a
// crossed module; check_crossed_module makes that implication testable.
DoubleModule from_crossed_module(const FiniteCategory& m_cat,
                                 const FiniteCategory& p_cat,
                                 const IdObjFunctor& mu,
                                 const RightAction& act_p,
                                 const FiniteCategory& h_cat,
                                 const IdObjFunctor& phi,
                                 const RightAction& act_h);

// Subgroups H = <h_gens>, V = <v_gens>, M = <m_gens> of a one-object
// groupoid P, with inclusions and conjugation actions. Throws NotNormalError
// (with the escaping conjugate as witness) unless M is normal in both H and
// V.
DoubleModule from_normal_subgroups(const FiniteCategory& p_cat,
                                   const std::vector<ArrowId>& h_gens,
                                   const std::vector<ArrowId>& v_gens,
                                   const std::vector<ArrowId>& m_gens);

// From semicore data (see check_semicore): V := P, psi = id, act_v := act_p,
// and act_h(m, h) := m^(phi h). Throws SemicoreAxiomError carrying a witness
// when the semicore checks fail.
DoubleModule from_semicore(const FiniteCategory& m_cat,
                           const FiniteCategory& h_cat,
                           const FiniteCategory& p_cat,
                           const IdObjFunctor& eta, const IdObjFunctor& mu,
                           const IdObjFunctor& phi, const RightAction& act_p);

}  // namespace dcat

#endif  // DCAT_DOUBLE_MODULE_HPP
