#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace cocontact {

enum class Side { Lagrangian, Hamiltonian };

/// Bundle signature: k parameter directions, n configuration coordinates.
/// Flattened coordinate order is t(k), q(n), fiber(n*k, row-major in i), z(k).
struct Signature {
  int k = 1;
  int n = 1;

  int dim() const { return 2 * k + n + n * k; }
  int contact_dim() const { return k + n + n * k; }

  int idx_t(int alpha) const { return alpha; }
  int idx_q(int i) const { return k + i; }
  int idx_fiber(int i, int alpha) const { return k + n + i * k + alpha; }
  int idx_z(int alpha) const { return k + n + n * k + alpha; }

  bool operator==(const Signature&) const = default;
};

/// Coordinate names for one side of a signature, in flattened order, plus
/// aliases accepted by the expression parser. The k=2, n=1 frame carries the
/// wave names (t1, x, u, ut, ux, zt, zx / momenta pt, px); k=1, n=1 carries
/// (t, q, v|p, z); other signatures use generated names t1.., q1.., v1_1..,
/// z1.. with p in place of v on the Hamiltonian side.
struct PhaseFrame {
  Signature sig;
  Side side = Side::Lagrangian;
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> aliases;

  static PhaseFrame make(Signature sig, Side side);

  const std::string& name_of(int flat_index) const { return names[flat_index]; }
};

/// Point of the full bundle; fiber holds velocities (Lagrangian side) or
/// momenta (Hamiltonian side), indexed fiber(i, alpha).
struct PhasePoint {
  Signature sig;
  Eigen::VectorXd t;
  Eigen::VectorXd q;
  Eigen::MatrixXd fiber;
  Eigen::VectorXd z;

  static PhasePoint zero(Signature sig);

  Eigen::VectorXd flat() const;
  static PhasePoint from_flat(Signature sig, const Eigen::VectorXd& x);
};

/// Point of the contact-level bundle (no parameter block).
struct ContactPoint {
  Signature sig;
  Eigen::VectorXd q;
  Eigen::MatrixXd fiber;
  Eigen::VectorXd z;

  static ContactPoint zero(Signature sig);

  Eigen::VectorXd flat() const;
  static ContactPoint from_flat(Signature sig, const Eigen::VectorXd& x);

  /// Embeds at parameter values t (copies q, fiber, z).
  PhasePoint attach(const Eigen::VectorXd& t) const;
};

/// Drops the parameter block.
ContactPoint detach(const PhasePoint& x);

/// Deterministic uniform draws: an mt19937_64 stream mapped to [0,1) through
/// its top 53 bits, so results are identical across platforms for one seed.
class SampleStream {
 public:
  explicit SampleStream(std::uint64_t seed) : rng_(seed) {}
  double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  double in(double lo, double hi) { return lo + (hi - lo) * unit(); }

 private:
  std::mt19937_64 rng_;
};

/// Inclusive-exclusive coordinate ranges keyed by canonical name; `fallback`
/// covers coordinates without an entry.
struct SampleRanges {
  std::pair<double, double> fallback{-1.5, 1.5};
  std::map<std::string, std::pair<double, double>> per_name;

  std::pair<double, double> of(const std::string& name) const {
    auto it = per_name.find(name);
    return it == per_name.end() ? fallback : it->second;
  }
};

/// Draws `count` points; coordinates are filled in flattened order so the
/// draw sequence is part of the reproducibility contract.
std::vector<PhasePoint> sample_points(const PhaseFrame& frame, int count,
                                      std::uint64_t seed, const SampleRanges& ranges);

/// Contact-level variant (no parameter block drawn).
std::vector<ContactPoint> sample_contact_points(const PhaseFrame& frame, int count,
                                                std::uint64_t seed,
                                                const SampleRanges& ranges);

}  // namespace cocontact
