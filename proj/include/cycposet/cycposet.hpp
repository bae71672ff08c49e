#pragma once

#include "cycposet/automorphisms.hpp"
#include "cycposet/bitmatrix.hpp"
#include "cycposet/canonical.hpp"
#include "cycposet/constructions.hpp"
#include "cycposet/error.hpp"
#include "cycposet/io.hpp"
#include "cycposet/oracle/brute_force.hpp"
#include "cycposet/oracle/enumeration.hpp"
#include "cycposet/oracle/lemmas.hpp"
#include "cycposet/permutation.hpp"
#include "cycposet/poset.hpp"
#include "cycposet/weights.hpp"
