#pragma once

#include "affine.hpp"
#include "algebraic.hpp"
#include "avalanche.hpp"
#include "bits.hpp"
#include "bounds.hpp"
#include "combined.hpp"
#include "corpus.hpp"
#include "differential.hpp"
#include "fraction.hpp"
#include "invariance.hpp"
#include "linear.hpp"
#include "report.hpp"
#include "sbox.hpp"
#include "sca.hpp"
#include "spectral.hpp"
#include "spectrum.hpp"
#include "table5.hpp"
