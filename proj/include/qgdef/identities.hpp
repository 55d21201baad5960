#pragma once

#include "qgdef/hseries.hpp"

#include <utility>

namespace qgdef {

// Pent(Φ) = (1⊗Φ)·(id⊗Δ⊗id)Φ·(Φ⊗1)·[(Δ⊗id⊗id)Φ]⁻¹·[(id⊗id⊗Δ)Φ]⁻¹
HSeries pent(const Uea& U, const HSeries& phi);
// B(F,Φ) = (1⊗F)((id⊗Δ)F)Φ − (F⊗1)(Δ⊗id)F
HSeries twist_defect(const Uea& U, const HSeries& F, const HSeries& phi);
// Defects of (Δ⊗id)R = Φ^{312}R^{13}(Φ^{132})⁻¹R^{23}Φ and (id⊗Δ)R = (Φ^{231})⁻¹R^{13}Φ^{213}R^{12}Φ⁻¹.
std::pair<HSeries, HSeries> hexagon_defect(const Uea& U, const HSeries& R, const HSeries& phi);
// u•F = (u⊗u)FΔ(u⁻¹)
HSeries gauge_act(const Uea& U, const HSeries& u, const HSeries& F);
// FΔ(a)F⁻¹
HSeries deformed_coproduct(const Uea& U, const HSeries& F, const UEElem& a);
// w = Σ F₂S(F₁)
HSeries twisted_antipode_element(const Uea& U, const HSeries& F);

// (a ⊗ b) ↦ ab on an arity-2 series.
HSeries multiply_legs(const Uea& U, const HSeries& a);

} // namespace qgdef
