#pragma once

#include <string>
#include <vector>

#include "aschur/aschur.hpp"

namespace aschur {

/**
 * Named verification targets for the defining relations of the Schur
 * category. Each relation family is indexed by a short integer parameter
 * tuple (strand thicknesses, variant selectors, polynomial degrees); the
 * generating-function families additionally take a series truncation
 * order N and are compared coefficient by coefficient up to that order.
 *
 * Both sides are built from the generators with compose/hstack and
 * compared exactly; nothing is rewritten diagrammatically.
 *
 * Relation ids and their parameters:
 *   secondone        []               both spot compositions are identities
 *   zeroforks        [a]              zero-leg merges/splits reduce to spots
 *   assrel           [a,b,c]          associativity and coassociativity
 *   mergesplit       [a,b,c,d]        split-merge expansion (a+b = c+d);
 *                                     includes the binomial law when (a,b)=(c,d)
 *   tourists         [a,b]            both expansions of the crossing
 *   sliders          [v,a,b,c]        crossing past merges/splits, v in 1..4
 *   symmetric        [a,b] | [a,b,c]  inverse crossings | braid relation
 *   swallows         [a,b]            crossings absorbed by merges/splits
 *   squareswitch1    [a,b,c,d]        square-switch, d <= a, c <= b+d
 *   squareswitch2    [a,b,c,d]        mirrored square-switch
 *   alghom           [r,d1,d2]        pins form an algebra map
 *   demazurerel      []               thin dot slide = the AH_2 relation
 *   fridaynight      [a,b,d]          pins split across merges (coproduct)
 *   shufflerel       [a,b,d1,d2]      shuffle relation on leading terms
 *   deformedshuffle  [a,b,d1,d2]      exact deformed shuffle relation
 *   jonrel           [v,a,b,d]        elementary dot slides above, v in 1..2
 *   otherjon         [v,a,b,d]        elementary dot slides below, v in 3..4
 *   bingley          [v,a,b] + N      generating-function dot slides, v in 1..4
 *   rome             [a,b,k] + N      crossings commute with paired pins
 *                                     (k = 0 elementary, 1 complete)
 *   averagedotslide  [v,r] + N        thin slides with a correction, v in 1..2
 *   skiving          [r] + N          one-strand induction identity
 *   skiving2         [r] + N          its mirror
 *   crazy            [v,a,b] + N      factorial split-merge slides, v in 1..2
 *
 * Throws std::invalid_argument for an unknown id or a malformed
 * parameter tuple.
 */
bool verify_relation(const std::string& name, const std::vector<int>& params,
                     int N = 0);

/**
 * One instance of a relation check, as produced by relation_grid and
 * consumed by the command-line verifier.
 */
struct RelationInstance {
    std::string name;
    std::vector<int> params;
    int N = 0;
};

// The full desk-scale verification grid: every relation id instantiated
// over thicknesses <= max_thickness, degrees <= max_degree, and series
// order N.
std::vector<RelationInstance> relation_grid(int max_thickness, int max_degree,
                                            int N);

} // namespace aschur
