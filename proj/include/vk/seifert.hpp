#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vk/gauss.hpp"

namespace vk {

// Bands are numbered from 0 here and from 1 in the text format. End 0 of band i is the slot a_{i+1},
// end 1 the slot a_{i+1}'.
struct AttachSlot {
  int band = 0;
  int end = 0;
  bool operator==(const AttachSlot&) const = default;
};

// A crossing of two band cores in the projection. Positions count the crossings met along a core,
// from end 0, starting at 0. The sign is that of (over core, under core), cores running end 0 to end 1.
struct BandCrossing {
  int over_band = 0;
  int under_band = 0;
  int pos_over = 0;
  int pos_under = 0;
  Sign sign = Sign::Plus;
  auto operator<=>(const BandCrossing&) const = default;
};

struct BandPresentation {
  int genus = 0;
  std::vector<AttachSlot> attach;  // counter-clockwise around the disk
  std::vector<BandCrossing> crossings;
  bool operator==(const BandPresentation&) const = default;
};

// One step of the knot: a crossing in the disk, or a run along a band. A forward run enters the band at
// end 0. Lanes are numbered counter-clockwise at end 0, so they appear reversed at end 1.
struct SurfaceEvent {
  enum class Kind { Crossing, Traversal };
  Kind kind = Kind::Crossing;
  int label = 0;
  Role role = Role::Over;
  Sign sign = Sign::Plus;
  int band = 0;
  bool forward = true;
  int lane = 0;

  static SurfaceEvent crossing(int label, Role role, Sign sign);
  static SurfaceEvent traversal(int band, bool forward, int lane);
  bool operator==(const SurfaceEvent&) const = default;
};

struct SurfaceDiagram {
  BandPresentation surface;
  std::vector<SurfaceEvent> events;  // cyclic
  bool operator==(const SurfaceDiagram&) const = default;
};

// Text format, one item per line:
//   genus <h>
//   attach a1,a2,a1',a2',...
//   bandcross <over-band> <under-band> <pos-over> <pos-under> <+|->   (zero or more)
//   knot <event>,<event>,...   events are Gauss tokens or B<band><+|-><lane>
SurfaceDiagram parse_surface_diagram(std::string_view text);
std::string serialize(const SurfaceDiagram& sd);

int band_count(const SurfaceDiagram& sd);
int lane_count(const SurfaceDiagram& sd, int band);
int station_count(const SurfaceDiagram& sd, int band);

// Empty iff the diagram is well formed; each entry names the failed condition.
std::vector<std::string> validate(const SurfaceDiagram& sd);

// Throw InvalidSurfaceDiagram unless validate is empty.
GaussDiagram kappa(const SurfaceDiagram& sd);
int linking_number(const SurfaceDiagram& sd);

// Loop: forward adds a curl to `band` before station `position`, a self-crossing at stations
// (position, position + 1) whose first station is over iff first_over. Backward removes the curl
// recorded at crossings[record]. Pass: swaps over and under at crossings[record].
enum class CoverMoveKind { Loop, Pass };
struct CoverMove {
  CoverMoveKind kind = CoverMoveKind::Loop;
  bool forward = true;
  int band = 0;
  int position = 0;
  bool first_over = true;
  Sign sign = Sign::Plus;
  int record = 0;
  bool operator==(const CoverMove&) const = default;
};

std::string to_string(const CoverMove& m);
std::vector<CoverMove> cover_moves(const SurfaceDiagram& sd);
SurfaceDiagram loop_move(const SurfaceDiagram& sd, const CoverMove& m);
SurfaceDiagram pass_move(const SurfaceDiagram& sd, const CoverMove& m);
SurfaceDiagram apply_cover_move(const SurfaceDiagram& sd, const CoverMove& m);

// Field-wise after renumbering crossing labels by first appearance and sorting band crossings.
bool surface_equal(const SurfaceDiagram& a, const SurfaceDiagram& b);

// Disk with 2h bands attached as a1,a2,a1',a2',... and one crossing per handle.
BandPresentation standard_presentation(int genus);
// Adds one handle without lanes to a diagram on a standard presentation.
SurfaceDiagram add_handle(const SurfaceDiagram& sd);
// A diagram on the standard surface of the least genus carrying d, with kappa equal to d.
SurfaceDiagram embed_on_standard_surface(const GaussDiagram& d);

}  // namespace vk
