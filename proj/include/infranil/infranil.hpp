#pragma once

#include <infranil/affine.hpp>
#include <infranil/classify.hpp>
#include <infranil/crystal.hpp>
#include <infranil/errors.hpp>
#include <infranil/io.hpp>
#include <infranil/matrix.hpp>
#include <infranil/nielsen.hpp>
#include <infranil/numtheory.hpp>
#include <infranil/oracle.hpp>
#include <infranil/periodic.hpp>
#include <infranil/polynomial.hpp>
#include <infranil/rational.hpp>
#include <infranil/series.hpp>
#include <infranil/smith.hpp>
#include <infranil/zeta.hpp>
