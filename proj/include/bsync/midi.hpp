#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bsync {

// One MIDI note onset, in absolute performance seconds.
struct NoteEvent {
    double onset_sec = 0.0;
    int pitch = 0;  // MIDI note number, 0..127
    int track = 0;  // source track, diagnostics only
};

struct MidiPerformance {
    std::vector<NoteEvent> events;  // sorted by onset_sec, ties by pitch
    double duration_sec = 0.0;      // last note-off when present, else last onset
};

// Piecewise-constant tempo over an absolute tick axis. Both conversion
// directions are exposed so the integration can be round-trip tested.
class TempoMap {
public:
    // changes: (absolute tick, microseconds per quarter), any order; an
    // implicit 120 BPM (500000 us) segment covers ticks before the first change.
    TempoMap(int ticks_per_quarter, std::vector<std::pair<std::int64_t, std::int64_t>> changes);

    double ticks_to_seconds(std::int64_t tick) const;
    std::int64_t seconds_to_ticks(double sec) const;

private:
    struct Segment {
        std::int64_t start_tick;
        double start_sec;
        double sec_per_tick;
    };
    std::vector<Segment> segments_;
};

// Parse a Standard MIDI File (formats 0 and 1). Every note-on with velocity
// > 0 becomes a NoteEvent; velocity 0 counts as a note-off. All set-tempo
// meta events are honored, from every track. Throws MidiParseError (with the
// byte offset) on malformed input and on format 2 files.
MidiPerformance parse_midi(std::span<const std::uint8_t> bytes);
MidiPerformance parse_midi_file(const std::string& path);

// A set of onsets merged into one column of the bootleg timeline.
struct ChordGroup {
    double onset_sec = 0.0;       // first onset of the group
    std::vector<int> pitches;     // sorted, unique
};

// Group onsets lying within epsilon_sec of the group's first onset (not
// chained: membership is measured against the group start).
std::vector<ChordGroup> merge_simultaneous(const MidiPerformance& perf, double epsilon_sec);

}  // namespace bsync
