#pragma once

#include "heckelab/batch.hpp"
#include "heckelab/coxeter.hpp"
#include "heckelab/errors.hpp"
#include "heckelab/hecke.hpp"
#include "heckelab/klbasis.hpp"
#include "heckelab/laurent.hpp"
#include "heckelab/projective.hpp"
