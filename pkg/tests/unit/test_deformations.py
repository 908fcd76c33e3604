"""Unit tests for the deformation registry and index validation."""
import pytest

from src.twistdeform.deformations import (
    ALL_DEFORMATIONS,
    GENERALIZED_DEFORMATIONS,
    DeformationId,
    GalileiDeformationId,
    admissible_indices,
    canonical_indices,
    format_indices,
    get_spec,
    parse_deformation,
    parse_indices,
    validate_indices,
)
from src.twistdeform.deformations import IndexConstraintError, UnknownDeformationError


class TestRegistry:
    """Tests for deformation lookup."""

    def test_eight_deformations(self):
        """Five basic and three superposed deformations."""
        assert len(ALL_DEFORMATIONS) == 8
        assert all(get_spec(d).generalized for d in GENERALIZED_DEFORMATIONS)

    def test_parse_by_value(self):
        """Ids parse from their string values."""
        assert parse_deformation("theta_kl+kappa") is DeformationId.THETA_KL_KAPPA
        assert parse_deformation(" kappa ") is DeformationId.KAPPA

    def test_unknown_deformation(self):
        """Unknown ids list the known ones."""
        with pytest.raises(UnknownDeformationError, match="theta_kl"):
            parse_deformation("theta")

    def test_components_and_galilei_images(self):
        """theta_kl+kappa superposes theta_kl and kappa and contracts to xi_kl+lambda."""
        spec = get_spec("theta_kl+kappa")
        assert spec.components == (DeformationId.THETA_KL, DeformationId.KAPPA)
        assert spec.galilei is GalileiDeformationId.XI_KL_LAMBDA


class TestIndices:
    """Tests for index constraints."""

    def test_equal_indices_quote_the_constraint(self):
        """kappa with i = k = 1 violates [i,k fixed, i != k]."""
        with pytest.raises(IndexConstraintError, match=r"\[i,k fixed, i != k\]"):
            validate_indices("kappa", {"i": 1, "k": 1})

    def test_non_spatial_index(self):
        """Indices must lie in 1..3."""
        with pytest.raises(IndexConstraintError, match="spatial"):
            validate_indices("theta_0i", {"i": 0})

    def test_missing_index(self):
        """kappa_bar needs i, k and l."""
        with pytest.raises(IndexConstraintError, match="missing index 'l'"):
            validate_indices("kappa_bar", {"i": 1, "k": 2})

    def test_restricts_to_used_names(self):
        """Extra names are dropped."""
        assert validate_indices("kappa", {"k": 1, "l": 2, "i": 3}) == {"i": 3, "k": 1}

    def test_admissible_counts(self):
        """Distinct spatial assignments: 6 pairs, 3 singles, 6 triples."""
        assert len(admissible_indices("theta_kl")) == 6
        assert len(admissible_indices("theta_0i")) == 3
        assert len(admissible_indices("kappa_bar")) == 6
        assert {"k": 1, "l": 2, "i": 3} in admissible_indices("theta_kl+kappa")

    def test_canonical(self):
        """k=1, l=2, i=3 restricted to the names in use."""
        assert canonical_indices("theta_0i") == {"i": 3}
        assert canonical_indices("kappa_hat") == {"k": 1, "l": 2}

    def test_parse_and_format(self):
        """Command line assignments round through the canonical text."""
        parsed = parse_indices("k=1, l=2,i=3")
        assert parsed == {"k": 1, "l": 2, "i": 3}
        assert format_indices({"i": 3, "k": 1}) == "k=1,i=3"

    def test_parse_rejects_unknown_names(self):
        """Only k, l and i are index names."""
        with pytest.raises(IndexConstraintError, match="q=1"):
            parse_indices("q=1")
