from fractions import Fraction

from rest_framework import serializers
from rest_framework.renderers import JSONRenderer

from .orbitalgebra import MExpansion
from .polynomials import format_coefficient, format_poly, sorted_terms
from .rootdata import integer_coweyl_vector, integer_weyl_vector, minimal_characteristic_vector, weyl_height


def exact(value):
    """Rationals as decimal strings, integers as ints."""
    value = Fraction(value)
    return value.numerator if value.denominator == 1 else str(value)


def render(data):
    return JSONRenderer().render(data)


class PolynomialSerializer(serializers.Serializer):
    """
    A τ-polynomial. `text` is the one-line form; `terms` lists exponents and
    coefficients (rationals and ν-expressions as strings) in display order.
    """
    text = serializers.SerializerMethodField()
    terms = serializers.SerializerMethodField()

    def get_text(self, obj):
        return format_poly(obj)

    def get_terms(self, obj):
        domain = obj.ring.domain
        return [
            {'exponents': list(monom), 'coefficient': format_coefficient(coeff, domain)}
            for monom, coeff in sorted_terms(obj)
        ]


class RootSystemSerializer(serializers.Serializer):
    name = serializers.CharField()
    rank = serializers.IntegerField()
    weyl_group_order = serializers.IntegerField()
    fundamental_weight_order = serializers.ListField(child=serializers.IntegerField())
    cartan = serializers.SerializerMethodField()
    gram = serializers.SerializerMethodField()
    weight_norms = serializers.SerializerMethodField()
    positive_roots = serializers.SerializerMethodField()
    weyl_vector = serializers.SerializerMethodField()
    characteristic_vectors = serializers.SerializerMethodField()

    def get_cartan(self, obj):
        return [list(row) for row in obj.cartan]

    def get_gram(self, obj):
        return [[exact(x) for x in row] for row in obj.gram]

    def get_weight_norms(self, obj):
        return [exact(obj.gram[a][a]) for a in range(obj.rank)]

    def get_positive_roots(self, obj):
        return len(obj.positive_roots)

    def get_weyl_vector(self, obj):
        return {
            'omega': list(obj.weyl_vector_omega),
            'root_coords': [exact(x) for x in obj.weyl_vector_root_coords],
            'coweyl_coroot_coords': [exact(x) for x in obj.coweyl_vector_coroot_coords],
        }

    def get_characteristic_vectors(self, obj):
        return {
            'weyl': list(integer_weyl_vector(obj)),
            'coweyl': list(integer_coweyl_vector(obj)),
            'minimal': list(minimal_characteristic_vector(obj)),
        }


class OrbitSerializer(serializers.Serializer):
    system = serializers.CharField()
    dominant = serializers.ListField(child=serializers.IntegerField())
    size = serializers.IntegerField()


class ExpansionSerializer(serializers.Serializer):
    """Σ μ_k M_k with terms by descending height; needs the root system in context."""
    terms = serializers.SerializerMethodField()

    def get_terms(self, obj):
        rs = self.context['rs']
        expansion = obj if isinstance(obj, MExpansion) else MExpansion(dict(obj))
        return [{'weight': list(k), 'coefficient': exact(v)} for k, v in expansion.ordered(rs)]


class SpectrumRowSerializer(serializers.Serializer):
    label = serializers.ListField(child=serializers.IntegerField())
    constant = serializers.SerializerMethodField()
    slope = serializers.SerializerMethodField()
    grading = serializers.IntegerField()
    norm = serializers.SerializerMethodField()
    height = serializers.SerializerMethodField()
    value = serializers.SerializerMethodField()

    def get_constant(self, obj):
        return exact(obj.constant)

    def get_slope(self, obj):
        return exact(obj.slope)

    def get_norm(self, obj):
        return exact(obj.norm)

    def get_height(self, obj):
        return exact(obj.height)

    def get_value(self, obj):
        nu_value = self.context.get('nu', obj.nu_value)
        return None if nu_value is None else exact(obj.value(nu_value))


class EigenstateSerializer(serializers.Serializer):
    label = serializers.ListField(child=serializers.IntegerField())
    nu = serializers.SerializerMethodField()
    eigenvalue = serializers.SerializerMethodField()
    expansion_M = serializers.SerializerMethodField()
    expansion_tau = serializers.SerializerMethodField()

    def get_nu(self, obj):
        return 'symbolic' if obj.symbolic else exact(obj.nu_value)

    def get_eigenvalue(self, obj):
        domain = obj.expansion_tau.ring.domain
        return format_coefficient(obj.eigenvalue, domain)

    def get_expansion_M(self, obj):
        domain = obj.expansion_tau.ring.domain
        rs = self.context['rs']
        ordered = sorted(obj.expansion_M.items(), key=lambda item: (-weyl_height(item[0], rs), item[0]))
        return [{'weight': list(k), 'coefficient': format_coefficient(v, domain)} for k, v in ordered]

    def get_expansion_tau(self, obj):
        return PolynomialSerializer(obj.expansion_tau).data


class FlagReportSerializer(serializers.Serializer):
    vector = serializers.ListField(child=serializers.IntegerField())
    bound = serializers.IntegerField()
    strict = serializers.BooleanField()
    checked = serializers.IntegerField()
    skipped = serializers.SerializerMethodField()
    passed = serializers.BooleanField()
    witness = serializers.DictField(allow_null=True)

    def get_skipped(self, obj):
        return len(obj.skipped)


class FootnoteEntrySerializer(serializers.Serializer):
    index = serializers.IntegerField()
    part = serializers.CharField()
    expected = serializers.CharField()
    computed = serializers.CharField()
    match = serializers.BooleanField()
    matching_labels = serializers.ListField(child=serializers.IntegerField())
