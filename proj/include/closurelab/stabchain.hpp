#ifndef CLOSURELAB_STABCHAIN_HPP_
#define CLOSURELAB_STABCHAIN_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "closurelab/perm.hpp"

namespace closurelab {

  // A base and strong generating set with explicit transversals, built by
  // deterministic Schreier-Sims.
  class StabilizerChain {
   public:
    struct Level {
      Point                     base;
      std::vector<Permutation>  generators;  // fix every earlier base point
      std::vector<Point>        orbit;       // discovery order
      std::vector<std::int32_t> index;       // point -> transversal slot
      std::vector<Permutation>  reps;        // base^reps[i] == orbit[i]
      std::vector<Permutation>  inverse_reps;

      bool in_orbit(Point x) const noexcept {
        return index[x] >= 0;
      }
      Permutation const& rep(Point x) const {
        return reps[static_cast<std::size_t>(index[x])];
      }
      Permutation const& inverse_rep(Point x) const {
        return inverse_reps[static_cast<std::size_t>(index[x])];
      }
    };

    StabilizerChain() = default;

    // Runs Schreier-Sims. The base begins with `preferred_base` in order;
    // those points are kept even when their level is trivial.
    StabilizerChain(std::size_t                     degree,
                    std::span<Permutation const>    generators,
                    std::span<Point const>          preferred_base = {});

    // Trusts that `strong_generators` is a strong generating set relative
    // to `base`; only the transversals are computed.
    static StabilizerChain from_strong_generators(
        std::size_t                  degree,
        std::span<Point const>       base,
        std::span<Permutation const> strong_generators);

    std::size_t degree() const noexcept {
      return _degree;
    }
    std::vector<Point> base() const;
    std::vector<Level> const& levels() const noexcept {
      return _levels;
    }
    std::size_t length() const noexcept {
      return _levels.size();
    }

    Integer order() const;

    // Residue of p after stripping from level `from`, and the level where
    // stripping stopped (length() when p passed every level).
    std::pair<Permutation, std::size_t> sift(Permutation p,
                                             std::size_t from = 0) const;

    bool contains(Permutation const& p) const;

    std::vector<Permutation> strong_generators() const;

    // Chain for the pointwise stabilizer of the first `from` base points.
    StabilizerChain tail(std::size_t from) const;

   private:
    void rebuild_level(std::size_t i);
    void schreier_sims();

    std::size_t        _degree = 0;
    std::vector<Level> _levels;
  };

  // Generators plus a lazily built, cached stabilizer chain. Copies share the
  // cache; the first chain construction is serialized.
  class PermGroup {
   public:
    PermGroup() : PermGroup(0) {}
    explicit PermGroup(std::size_t degree, std::vector<Permutation> gens = {});
    explicit PermGroup(StabilizerChain chain);
    // `chain` must be a chain for the group generated by `gens`.
    PermGroup(std::vector<Permutation> gens, StabilizerChain chain);

    static PermGroup trivial(std::size_t degree) {
      return PermGroup(degree);
    }

    std::size_t degree() const noexcept {
      return _degree;
    }
    std::vector<Permutation> const& generators() const noexcept {
      return _generators;
    }

    StabilizerChain const& chain() const;

    Integer order() const {
      return chain().order();
    }
    bool is_trivial() const noexcept;

    // Chain whose base starts with `prefix`, cached per prefix.
    std::shared_ptr<StabilizerChain const>
    chain_with_base(std::span<Point const> prefix) const;

   private:
    struct Cache {
      std::once_flag                 once;
      std::optional<StabilizerChain> chain;
      std::mutex                     mutex;
      std::map<std::vector<Point>, std::shared_ptr<StabilizerChain const>>
          by_prefix;
    };

    std::size_t              _degree;
    std::vector<Permutation> _generators;
    std::shared_ptr<Cache>   _cache;
  };

  StabilizerChain build_chain(PermGroup const&       G,
                              std::span<Point const> preferred_base = {});

  Integer order(PermGroup const& G);

  // Throws DegreeMismatch if p.degree() != G.degree().
  bool contains(PermGroup const& G, Permutation const& p);

  // Some g in G with src^g == dst, or nullopt. src must be injective; a
  // non-injective dst yields nullopt. The witness is the product of
  // transversal elements of the chain based at src.
  std::optional<Permutation> tuple_transporter(PermGroup const&       G,
                                               std::span<Point const> src,
                                               std::span<Point const> dst);

  PermGroup pointwise_stabilizer(PermGroup const& G, std::span<Point const> pts);

  // Orbit of x in discovery order.
  std::vector<Point> orbit(std::span<Permutation const> gens,
                           std::size_t                  degree,
                           Point                        x);

  // The group generated by G and the extra elements.
  PermGroup join(PermGroup const& G, std::span<Permutation const> extra);

  bool is_subgroup(PermGroup const& H, PermGroup const& G);

}  // namespace closurelab

#endif  // CLOSURELAB_STABCHAIN_HPP_
