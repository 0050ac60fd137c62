#include "constelloid/naturality.hpp"

#include <stdexcept>

namespace constelloid {

namespace {

std::vector<ElementId> pair_image(const CanonicalExtension& source_ext,
                                  const CanonicalExtension& target_ext,
                                  const Morphism& rho) {
  std::vector<ElementId> map(source_ext.pairs.size());
  for (std::size_t i = 0; i < source_ext.pairs.size(); ++i) {
    const PairElement& p = source_ext.pairs[i];
    const ElementId image =
        target_ext.pair_id(rho.apply(p.underlying), rho.apply(p.cod));
    if (image == kUndefined) {
      throw std::logic_error("extension_functor: image pair missing");
    }
    map[i] = image;
  }
  return map;
}

}  // namespace

ISWitness extension_is_witness(const StructureDef& q,
                               const CanonicalExtension& ext) {
  const ISCheckResult result = check_is_category(
      ext.category, insertion_part(ext), surjection_part(q, ext).ids);
  if (!result.ok) {
    throw std::invalid_argument(
        "extension_is_witness: the extension is not an IS-category");
  }
  return *result.witness;
}

ExtensionFunctorResult extension_functor(const Morphism& rho) {
  const RadiantFlags flags = check_radiant(rho);
  if (!flags.range_radiant) {
    throw std::invalid_argument("extension_functor: not a range radiant");
  }
  const CanonicalExtension source_ext = canonical_extension(rho.source);
  const CanonicalExtension target_ext = canonical_extension(rho.target);

  ExtensionFunctorResult out;
  out.functor = Morphism{source_ext.category, target_ext.category,
                         pair_image(source_ext, target_ext, rho)};

  const RadiantFlags functor_flags = check_radiant(out.functor);
  out.functorial = functor_flags.radiant && functor_flags.range_radiant;

  const ISWitness source_w = extension_is_witness(rho.source, source_ext);
  const ISWitness target_w = extension_is_witness(rho.target, target_ext);
  const ISFunctorResult is_result =
      check_is_functor(out.functor, source_w, target_w);
  out.preserves_insertions = is_result.preserves_insertions;
  out.preserves_surjections = is_result.preserves_surjections;
  out.ok = out.functorial && is_result.ok;
  return out;
}

RestrictionRadiantResult restriction_radiant(const Morphism& f,
                                             const ISWitness& source_w,
                                             const ISWitness& target_w) {
  const ISFunctorResult is_result = check_is_functor(f, source_w, target_w);
  if (!is_result.ok) {
    throw std::invalid_argument("restriction_radiant: not an IS-functor");
  }
  const SurjectionConstellation source_sc =
      surjection_constellation(f.source, source_w);
  const SurjectionConstellation target_sc =
      surjection_constellation(f.target, target_w);

  std::vector<ElementId> map(source_sc.to_parent.size());
  for (std::size_t i = 0; i < source_sc.to_parent.size(); ++i) {
    const ElementId parent = source_sc.to_parent[i];
    const ElementId image =
        target_sc.from_parent[static_cast<std::size_t>(f.apply(parent))];
    if (image == kUndefined) {
      throw std::logic_error("restriction_radiant: image not a surjection");
    }
    map[i] = image;
  }
  RestrictionRadiantResult out;
  out.radiant = Morphism{source_sc.sprime, target_sc.sprime, map};
  out.range_radiant = check_radiant(out.radiant).range_radiant;
  return out;
}

EtaResult eta_embedding(const StructureDef& q) {
  if (!q.rmap) {
    throw std::invalid_argument("eta_embedding: range map required");
  }
  const CanonicalExtension ext = canonical_extension(q);
  const ISWitness w = extension_is_witness(q, ext);
  const SurjectionConstellation sc =
      surjection_constellation(ext.category, w);

  std::vector<ElementId> map(static_cast<std::size_t>(q.size()));
  for (ElementId s = 0; s < q.size(); ++s) {
    const ElementId pair = ext.pair_id(s, q.ran(s));
    map[static_cast<std::size_t>(s)] =
        sc.from_parent[static_cast<std::size_t>(pair)];
    if (pair == kUndefined || map[static_cast<std::size_t>(s)] == kUndefined) {
      throw std::logic_error("eta_embedding: image missing");
    }
  }
  EtaResult out;
  StructureDef sprime_plain = sc.sprime;
  sprime_plain.order.reset();
  StructureDef q_plain = q;
  q_plain.order.reset();
  out.eta = Morphism{q_plain, sprime_plain, map};
  out.isomorphism = is_structure_isomorphism(out.eta);
  return out;
}

EtaSquareResult eta_square(const Morphism& rho) {
  EtaSquareResult out;
  const EtaResult eta_p = eta_embedding(rho.source);
  const EtaResult eta_q = eta_embedding(rho.target);
  out.isomorphisms = eta_p.isomorphism && eta_q.isomorphism;

  const ExtensionFunctorResult ext_functor = extension_functor(rho);
  const CanonicalExtension source_ext = canonical_extension(rho.source);
  const CanonicalExtension target_ext = canonical_extension(rho.target);
  const ISWitness source_w = extension_is_witness(rho.source, source_ext);
  const ISWitness target_w = extension_is_witness(rho.target, target_ext);
  const RestrictionRadiantResult induced =
      restriction_radiant(ext_functor.functor, source_w, target_w);

  out.commutes = true;
  for (ElementId s = 0; s < rho.source.size(); ++s) {
    const ElementId via_eta = induced.radiant.apply(eta_p.eta.apply(s));
    const ElementId via_rho = eta_q.eta.apply(rho.apply(s));
    if (via_eta != via_rho) {
      out.commutes = false;
    }
  }
  out.recovers_rho = out.commutes && induced.range_radiant;
  return out;
}

TauSquareResult tau_square(const Morphism& f, const ISWitness& source_w,
                           const ISWitness& target_w) {
  TauSquareResult out;
  const PsiResult psi_c = psi_isomorphism(f.source, source_w);
  const PsiResult psi_d = psi_isomorphism(f.target, target_w);
  out.isomorphisms = psi_c.verdict && psi_d.verdict;

  const RestrictionRadiantResult rho_f =
      restriction_radiant(f, source_w, target_w);
  const std::vector<ElementId> pair_map =
      pair_image(psi_c.ext, psi_d.ext, rho_f.radiant);

  out.commutes = true;
  for (ElementId x = 0; x < f.source.size(); ++x) {
    const ElementId via_tau =
        pair_map[static_cast<std::size_t>(psi_c.psi.apply(x))];
    const ElementId via_f = psi_d.psi.apply(f.apply(x));
    if (via_tau != via_f) {
      out.commutes = false;
    }
  }
  return out;
}

NaturalityResult naturality_check(const Morphism& rho, const Morphism& f,
                                  const ISWitness& source_w,
                                  const ISWitness& target_w) {
  NaturalityResult out;
  const EtaSquareResult eta = eta_square(rho);
  out.eta_isomorphisms = eta.isomorphisms;
  out.eta_square = eta.commutes;
  const TauSquareResult tau = tau_square(f, source_w, target_w);
  out.tau_isomorphisms = tau.isomorphisms;
  out.tau_square = tau.commutes;
  out.all = out.eta_isomorphisms && out.eta_square && out.tau_isomorphisms &&
            out.tau_square;
  return out;
}

}  // namespace constelloid
