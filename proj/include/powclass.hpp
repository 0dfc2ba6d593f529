#pragma once

#include "powclass/commutators.hpp"
#include "powclass/constructors.hpp"
#include "powclass/corpus.hpp"
#include "powclass/error.hpp"
#include "powclass/fusion.hpp"
#include "powclass/group.hpp"
#include "powclass/harness.hpp"
#include "powclass/homomorphism.hpp"
#include "powclass/isomorphism.hpp"
#include "powclass/lattice.hpp"
#include "powclass/permutation.hpp"
#include "powclass/powerful.hpp"
#include "powclass/psylow.hpp"
#include "powclass/report.hpp"
#include "powclass/series.hpp"
#include "powclass/subgroup.hpp"
