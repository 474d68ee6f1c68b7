#ifndef EDGERING_CAPS_HPP
#define EDGERING_CAPS_HPP

namespace edgering {

// Resource caps guarding the brute-force components.  Defaults keep every
// verification run at desk scale; EDGERING_CAPS="lattice=<n>,ground=<n>,edges=<n>"
// overrides them process-wide.
struct Caps {
    int lattice = 4096; // max number of lcm-lattice elements per ideal
    int ground = 20;    // max ground-set size for a homology computation
    int edges = 16;     // max edge count for the exact matching search
};

// Caps in effect for this process (parsed from EDGERING_CAPS once).
const Caps& caps();

} // namespace edgering

#endif
