#pragma once

namespace qgrkz {

// Sign conventions that the identities pin down. The defaults are the
// consistent ones; the other values exist so tests can show the checks
// notice when one is flipped.
struct Conventions {
    // Count crossings of <., a> = n + 1/2 toward the half-space with 0.
    bool crossing_toward_origin = true;
    // Diagonal of the tilde operators is tilde_diagonal_sign * sum of Euler ratios.
    int tilde_diagonal_sign = -1;
    // Sign in front of the gauge term q d_i psi in the hatted connection.
    int gauge_sign = 1;
    // Multiplies every sigma sign (mutation hook).
    int sigma_flip = 1;

    friend bool operator==(const Conventions&, const Conventions&) = default;
};

}  // namespace qgrkz
