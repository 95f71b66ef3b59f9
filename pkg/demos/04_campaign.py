"""A seeded randomized campaign over F_p; the output is reproducible byte for byte."""
import io

from sylvester.campaign import CampaignConfig, cmd_campaign
from sylvester.cli import emit
from sylvester.fields import FieldConfig

cfg = CampaignConfig("sylvester", trials=200, n_range=(2, 8), d_range=(0, 30), field=FieldConfig("prime"), seed=1)
records = cmd_campaign(cfg)
print(records[0])

# same seed, four threads: identical text
a, b = io.StringIO(), io.StringIO()
emit(records, pretty=False, out=a)
emit(cmd_campaign(CampaignConfig(**{**cfg.__dict__, "workers": 4})), pretty=False, out=b)
print(a.getvalue() == b.getvalue())
