#pragma once

#include <string>

#include "ffm/mode_field.hpp"
#include "ffm/su2.hpp"

namespace ffm {

std::string pairing_name(PairingChoice p);
PairingChoice pairing_from_name(const std::string& name);  // ConfigError

// Single mode function: {a, h, kmax, nodes: [[i,j,l]...], re: [...], im: [...]},
// arrays aligned with the grid's deterministic node order.
void write_mode_field(const std::string& path, const ModeField& f);
ModeField read_mode_field(const std::string& path);  // SnapshotError

// Full state snapshot: the grid header plus pairing, time, and one
// {re, im} block per mode function.
struct StateSnapshot {
    ClebschState state;
    PairingChoice pairing = PairingChoice::PolarizedTrace;
};

void write_state_snapshot(const std::string& path, const ClebschState& s,
                          PairingChoice pairing);
StateSnapshot read_state_snapshot(const std::string& path);  // SnapshotError

}  // namespace ffm
