/**
 * Server documents captured verbatim from the running service. Regenerate
 * with the CLI against the sample scenario files, for example:
 *
 *   python3 -m lotwise evaluate scenarios/piece-b.json --format json
 *   python3 -m lotwise sweep scenarios/piece-b.json --axis p \
 *     --values 0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1.0 --format json
 *
 * Keeping them verbatim is the point: the tests below assert that the
 * browser-side code preserves these numbers exactly and only rounds for
 * display.
 */

import type { DecisionDocument, ScenarioDocument, SweepDocument } from "../src/types.js";

export const scenarioPieceA: ScenarioDocument = {
  "name": "piece-a",
  "piece": {
    "id": "a",
    "setup_cost": 270.0,
    "unit_cost": 0.06,
    "cycle_time_min": 0.3,
    "lot_multiple": 20000
  },
  "order": {
    "ordered_qty": 20000
  },
  "holding": {
    "annual_rate": 0.09,
    "storage_days": 150
  },
  "forecast": {
    "sale_probability": 0.9,
    "target_extra_qty": 20000
  },
  "capacity": {
    "available_min": 2000
  },
  "annual_demand": 48000
};

export const scenarioPieceB: ScenarioDocument = {
  "name": "piece-b",
  "piece": {
    "id": "b",
    "setup_cost": 2000.0,
    "unit_cost": 0.3,
    "cycle_time_min": 0.5,
    "lot_multiple": 20000
  },
  "order": {
    "ordered_qty": 20000
  },
  "holding": {
    "annual_rate": 0.09,
    "storage_days": 150
  },
  "forecast": {
    "sale_probability": 0.8,
    "target_extra_qty": 20000
  },
  "capacity": {
    "available_min": 12000
  },
  "annual_demand": 12000
};

export const decisionPieceA: DecisionDocument = {
  "scenario_name": "piece-a",
  "recommendation": {
    "strategy": "pull",
    "recommended_extra_qty": 0,
    "capacity_cap": 6666,
    "lot_rounded_qty": 0,
    "economic_ok": true,
    "gain_at_recommendation": 0.0,
    "constraint_trail": [
      {
        "constraint": "capacity",
        "before": 20000,
        "after": 6666
      },
      {
        "constraint": "lot_multiple",
        "before": 6666,
        "after": 0
      }
    ],
    "evaluation": {
      "extra_qty": 0,
      "period_rate": 0.036986301369863014,
      "pull_unit_cost": 0.0735,
      "push_unit_cost": 0.0735,
      "holding_cost_total": 0.0,
      "stocking_rate_threshold": 0.225,
      "result_if_sold_certain": 270.0,
      "expected_result_if_sold": 243.0,
      "expected_loss_if_unsold": 0.0,
      "expected_gain": 243.0,
      "break_even_probability": 0.0
    }
  },
  "warnings": [
    {
      "code": "rate_outside_industry_range",
      "message": "rate below industry range 15-35%",
      "field": "holding.annual_rate",
      "severity": "advisory"
    }
  ]
};

export const decisionPieceB: DecisionDocument = {
  "scenario_name": "piece-b",
  "recommendation": {
    "strategy": "push",
    "recommended_extra_qty": 20000,
    "capacity_cap": 24000,
    "lot_rounded_qty": 20000,
    "economic_ok": true,
    "gain_at_recommendation": 178.0821917808221,
    "constraint_trail": [],
    "evaluation": {
      "extra_qty": 20000,
      "period_rate": 0.036986301369863014,
      "pull_unit_cost": 0.4,
      "push_unit_cost": 0.3555479452054795,
      "holding_cost_total": 221.91780821917808,
      "stocking_rate_threshold": 0.3333333333333333,
      "result_if_sold_certain": 1778.0821917808219,
      "expected_result_if_sold": 1422.4657534246576,
      "expected_loss_if_unsold": 1244.3835616438355,
      "expected_gain": 178.0821917808221,
      "break_even_probability": 0.7777397260273973
    }
  },
  "warnings": [
    {
      "code": "rate_outside_industry_range",
      "message": "rate below industry range 15-35%",
      "field": "holding.annual_rate",
      "severity": "advisory"
    }
  ]
};

export const sweepPieceA: SweepDocument = {
  "scenario_name": "piece-a",
  "axis": "sale_probability",
  "rows": [
    {
      "axis_value": 0.1,
      "evaluation": {
        "extra_qty": 20000,
        "period_rate": 0.036986301369863014,
        "pull_unit_cost": 0.0735,
        "push_unit_cost": 0.06785958904109589,
        "holding_cost_total": 44.38356164383562,
        "stocking_rate_threshold": 0.225,
        "result_if_sold_certain": 225.6164383561644,
        "expected_result_if_sold": 22.56164383561644,
        "expected_loss_if_unsold": 1119.9452054794522,
        "expected_gain": -1097.3835616438357,
        "break_even_probability": 0.8465194296896842
      }
    },
    {
      "axis_value": 0.2,
      "evaluation": {
        "extra_qty": 20000,
        "period_rate": 0.036986301369863014,
        "pull_unit_cost": 0.0735,
        "push_unit_cost": 0.06785958904109589,
        "holding_cost_total": 44.38356164383562,
        "stocking_rate_threshold": 0.225,
        "result_if_sold_certain": 225.6164383561644,
        "expected_result_if_sold": 45.12328767123288,
        "expected_loss_if_unsold": 995.5068493150686,
        "expected_gain": -950.3835616438357,
        "break_even_probability": 0.8465194296896842
      }
    },
    {
      "axis_value": 0.3,
      "evaluation": {
        "extra_qty": 20000,
        "period_rate": 0.036986301369863014,
        "pull_unit_cost": 0.0735,
        "push_unit_cost": 0.06785958904109589,
        "holding_cost_total": 44.38356164383562,
        "stocking_rate_threshold": 0.225,
        "result_if_sold_certain": 225.6164383561644,
        "expected_result_if_sold": 67.68493150684931,
        "expected_loss_if_unsold": 871.068493150685,
        "expected_gain": -803.3835616438356,
        "break_even_probability": 0.8465194296896842
      }
    },
    {
      "axis_value": 0.4,
      "evaluation": {
        "extra_qty": 20000,
        "period_rate": 0.036986301369863014,
        "pull_unit_cost": 0.0735,
        "push_unit_cost": 0.06785958904109589,
        "holding_cost_total": 44.38356164383562,
        "stocking_rate_threshold": 0.225,
        "result_if_sold_certain": 225.6164383561644,
        "expected_result_if_sold": 90.24657534246576,
        "expected_loss_if_unsold": 746.6301369863014,
        "expected_gain": -656.3835616438356,
        "break_even_probability": 0.8465194296896842
      }
    },
    {
      "axis_value": 0.5,
      "evaluation": {
        "extra_qty": 20000,
        "period_rate": 0.036986301369863014,
        "pull_unit_cost": 0.0735,
        "push_unit_cost": 0.06785958904109589,
        "holding_cost_total": 44.38356164383562,
        "stocking_rate_threshold": 0.225,
        "result_if_sold_certain": 225.6164383561644,
        "expected_result_if_sold": 112.8082191780822,
        "expected_loss_if_unsold": 622.1917808219179,
        "expected_gain": -509.38356164383566,
        "break_even_probability": 0.8465194296896842
      }
    },
    {
      "axis_value": 0.6,
      "evaluation": {
        "extra_qty": 20000,
        "period_rate": 0.036986301369863014,
        "pull_unit_cost": 0.0735,
        "push_unit_cost": 0.06785958904109589,
        "holding_cost_total": 44.38356164383562,
        "stocking_rate_threshold": 0.225,
        "result_if_sold_certain": 225.6164383561644,
        "expected_result_if_sold": 135.36986301369862,
        "expected_loss_if_unsold": 497.7534246575343,
        "expected_gain": -362.3835616438357,
        "break_even_probability": 0.8465194296896842
      }
    },
    {
      "axis_value": 0.7,
      "evaluation": {
        "extra_qty": 20000,
        "period_rate": 0.036986301369863014,
        "pull_unit_cost": 0.0735,
        "push_unit_cost": 0.06785958904109589,
        "holding_cost_total": 44.38356164383562,
        "stocking_rate_threshold": 0.225,
        "result_if_sold_certain": 225.6164383561644,
        "expected_result_if_sold": 157.93150684931507,
        "expected_loss_if_unsold": 373.31506849315076,
        "expected_gain": -215.3835616438357,
        "break_even_probability": 0.8465194296896842
      }
    },
    {
      "axis_value": 0.8,
      "evaluation": {
        "extra_qty": 20000,
        "period_rate": 0.036986301369863014,
        "pull_unit_cost": 0.0735,
        "push_unit_cost": 0.06785958904109589,
        "holding_cost_total": 44.38356164383562,
        "stocking_rate_threshold": 0.225,
        "result_if_sold_certain": 225.6164383561644,
        "expected_result_if_sold": 180.49315068493152,
        "expected_loss_if_unsold": 248.8767123287671,
        "expected_gain": -68.38356164383558,
        "break_even_probability": 0.8465194296896842
      }
    },
    {
      "axis_value": 0.9,
      "evaluation": {
        "extra_qty": 20000,
        "period_rate": 0.036986301369863014,
        "pull_unit_cost": 0.0735,
        "push_unit_cost": 0.06785958904109589,
        "holding_cost_total": 44.38356164383562,
        "stocking_rate_threshold": 0.225,
        "result_if_sold_certain": 225.6164383561644,
        "expected_result_if_sold": 203.05479452054797,
        "expected_loss_if_unsold": 124.43835616438355,
        "expected_gain": 78.61643835616442,
        "break_even_probability": 0.8465194296896842
      }
    },
    {
      "axis_value": 1.0,
      "evaluation": {
        "extra_qty": 20000,
        "period_rate": 0.036986301369863014,
        "pull_unit_cost": 0.0735,
        "push_unit_cost": 0.06785958904109589,
        "holding_cost_total": 44.38356164383562,
        "stocking_rate_threshold": 0.225,
        "result_if_sold_certain": 225.6164383561644,
        "expected_result_if_sold": 225.6164383561644,
        "expected_loss_if_unsold": 0.0,
        "expected_gain": 225.6164383561644,
        "break_even_probability": 0.8465194296896842
      }
    }
  ]
};

export const sweepPieceB: SweepDocument = {
  "scenario_name": "piece-b",
  "axis": "sale_probability",
  "rows": [
    {
      "axis_value": 0.1,
      "evaluation": {
        "extra_qty": 20000,
        "period_rate": 0.036986301369863014,
        "pull_unit_cost": 0.4,
        "push_unit_cost": 0.3555479452054795,
        "holding_cost_total": 221.91780821917808,
        "stocking_rate_threshold": 0.3333333333333333,
        "result_if_sold_certain": 1778.0821917808219,
        "expected_result_if_sold": 177.8082191780822,
        "expected_loss_if_unsold": 5599.726027397261,
        "expected_gain": -5421.917808219178,
        "break_even_probability": 0.7777397260273973
      }
    },
    {
      "axis_value": 0.2,
      "evaluation": {
        "extra_qty": 20000,
        "period_rate": 0.036986301369863014,
        "pull_unit_cost": 0.4,
        "push_unit_cost": 0.3555479452054795,
        "holding_cost_total": 221.91780821917808,
        "stocking_rate_threshold": 0.3333333333333333,
        "result_if_sold_certain": 1778.0821917808219,
        "expected_result_if_sold": 355.6164383561644,
        "expected_loss_if_unsold": 4977.534246575343,
        "expected_gain": -4621.917808219178,
        "break_even_probability": 0.7777397260273973
      }
    },
    {
      "axis_value": 0.3,
      "evaluation": {
        "extra_qty": 20000,
        "period_rate": 0.036986301369863014,
        "pull_unit_cost": 0.4,
        "push_unit_cost": 0.3555479452054795,
        "holding_cost_total": 221.91780821917808,
        "stocking_rate_threshold": 0.3333333333333333,
        "result_if_sold_certain": 1778.0821917808219,
        "expected_result_if_sold": 533.4246575342465,
        "expected_loss_if_unsold": 4355.342465753424,
        "expected_gain": -3821.9178082191775,
        "break_even_probability": 0.7777397260273973
      }
    },
    {
      "axis_value": 0.4,
      "evaluation": {
        "extra_qty": 20000,
        "period_rate": 0.036986301369863014,
        "pull_unit_cost": 0.4,
        "push_unit_cost": 0.3555479452054795,
        "holding_cost_total": 221.91780821917808,
        "stocking_rate_threshold": 0.3333333333333333,
        "result_if_sold_certain": 1778.0821917808219,
        "expected_result_if_sold": 711.2328767123288,
        "expected_loss_if_unsold": 3733.150684931507,
        "expected_gain": -3021.9178082191784,
        "break_even_probability": 0.7777397260273973
      }
    },
    {
      "axis_value": 0.5,
      "evaluation": {
        "extra_qty": 20000,
        "period_rate": 0.036986301369863014,
        "pull_unit_cost": 0.4,
        "push_unit_cost": 0.3555479452054795,
        "holding_cost_total": 221.91780821917808,
        "stocking_rate_threshold": 0.3333333333333333,
        "result_if_sold_certain": 1778.0821917808219,
        "expected_result_if_sold": 889.0410958904109,
        "expected_loss_if_unsold": 3110.958904109589,
        "expected_gain": -2221.9178082191784,
        "break_even_probability": 0.7777397260273973
      }
    },
    {
      "axis_value": 0.6,
      "evaluation": {
        "extra_qty": 20000,
        "period_rate": 0.036986301369863014,
        "pull_unit_cost": 0.4,
        "push_unit_cost": 0.3555479452054795,
        "holding_cost_total": 221.91780821917808,
        "stocking_rate_threshold": 0.3333333333333333,
        "result_if_sold_certain": 1778.0821917808219,
        "expected_result_if_sold": 1066.849315068493,
        "expected_loss_if_unsold": 2488.7671232876714,
        "expected_gain": -1421.9178082191784,
        "break_even_probability": 0.7777397260273973
      }
    },
    {
      "axis_value": 0.7,
      "evaluation": {
        "extra_qty": 20000,
        "period_rate": 0.036986301369863014,
        "pull_unit_cost": 0.4,
        "push_unit_cost": 0.3555479452054795,
        "holding_cost_total": 221.91780821917808,
        "stocking_rate_threshold": 0.3333333333333333,
        "result_if_sold_certain": 1778.0821917808219,
        "expected_result_if_sold": 1244.6575342465753,
        "expected_loss_if_unsold": 1866.5753424657537,
        "expected_gain": -621.9178082191784,
        "break_even_probability": 0.7777397260273973
      }
    },
    {
      "axis_value": 0.8,
      "evaluation": {
        "extra_qty": 20000,
        "period_rate": 0.036986301369863014,
        "pull_unit_cost": 0.4,
        "push_unit_cost": 0.3555479452054795,
        "holding_cost_total": 221.91780821917808,
        "stocking_rate_threshold": 0.3333333333333333,
        "result_if_sold_certain": 1778.0821917808219,
        "expected_result_if_sold": 1422.4657534246576,
        "expected_loss_if_unsold": 1244.3835616438355,
        "expected_gain": 178.0821917808221,
        "break_even_probability": 0.7777397260273973
      }
    },
    {
      "axis_value": 0.9,
      "evaluation": {
        "extra_qty": 20000,
        "period_rate": 0.036986301369863014,
        "pull_unit_cost": 0.4,
        "push_unit_cost": 0.3555479452054795,
        "holding_cost_total": 221.91780821917808,
        "stocking_rate_threshold": 0.3333333333333333,
        "result_if_sold_certain": 1778.0821917808219,
        "expected_result_if_sold": 1600.2739726027396,
        "expected_loss_if_unsold": 622.1917808219177,
        "expected_gain": 978.0821917808219,
        "break_even_probability": 0.7777397260273973
      }
    },
    {
      "axis_value": 1.0,
      "evaluation": {
        "extra_qty": 20000,
        "period_rate": 0.036986301369863014,
        "pull_unit_cost": 0.4,
        "push_unit_cost": 0.3555479452054795,
        "holding_cost_total": 221.91780821917808,
        "stocking_rate_threshold": 0.3333333333333333,
        "result_if_sold_certain": 1778.0821917808219,
        "expected_result_if_sold": 1778.0821917808219,
        "expected_loss_if_unsold": 0.0,
        "expected_gain": 1778.0821917808219,
        "break_even_probability": 0.7777397260273973
      }
    }
  ]
};

/** Sweep of piece-b with target_extra_qty forced to 0: the gain ray G = P * CS. */
export const sweepZeroExtra: SweepDocument = {
  "scenario_name": "piece-b",
  "axis": "sale_probability",
  "rows": [
    {
      "axis_value": 0.0,
      "evaluation": {
        "extra_qty": 0,
        "period_rate": 0.036986301369863014,
        "pull_unit_cost": 0.4,
        "push_unit_cost": 0.4,
        "holding_cost_total": 0.0,
        "stocking_rate_threshold": 0.3333333333333333,
        "result_if_sold_certain": 2000.0,
        "expected_result_if_sold": 0.0,
        "expected_loss_if_unsold": 0.0,
        "expected_gain": 0.0,
        "break_even_probability": 0.0
      }
    },
    {
      "axis_value": 0.1,
      "evaluation": {
        "extra_qty": 0,
        "period_rate": 0.036986301369863014,
        "pull_unit_cost": 0.4,
        "push_unit_cost": 0.4,
        "holding_cost_total": 0.0,
        "stocking_rate_threshold": 0.3333333333333333,
        "result_if_sold_certain": 2000.0,
        "expected_result_if_sold": 200.0,
        "expected_loss_if_unsold": 0.0,
        "expected_gain": 200.0,
        "break_even_probability": 0.0
      }
    },
    {
      "axis_value": 0.2,
      "evaluation": {
        "extra_qty": 0,
        "period_rate": 0.036986301369863014,
        "pull_unit_cost": 0.4,
        "push_unit_cost": 0.4,
        "holding_cost_total": 0.0,
        "stocking_rate_threshold": 0.3333333333333333,
        "result_if_sold_certain": 2000.0,
        "expected_result_if_sold": 400.0,
        "expected_loss_if_unsold": 0.0,
        "expected_gain": 400.0,
        "break_even_probability": 0.0
      }
    },
    {
      "axis_value": 0.3,
      "evaluation": {
        "extra_qty": 0,
        "period_rate": 0.036986301369863014,
        "pull_unit_cost": 0.4,
        "push_unit_cost": 0.4,
        "holding_cost_total": 0.0,
        "stocking_rate_threshold": 0.3333333333333333,
        "result_if_sold_certain": 2000.0,
        "expected_result_if_sold": 600.0,
        "expected_loss_if_unsold": 0.0,
        "expected_gain": 600.0,
        "break_even_probability": 0.0
      }
    },
    {
      "axis_value": 0.4,
      "evaluation": {
        "extra_qty": 0,
        "period_rate": 0.036986301369863014,
        "pull_unit_cost": 0.4,
        "push_unit_cost": 0.4,
        "holding_cost_total": 0.0,
        "stocking_rate_threshold": 0.3333333333333333,
        "result_if_sold_certain": 2000.0,
        "expected_result_if_sold": 800.0,
        "expected_loss_if_unsold": 0.0,
        "expected_gain": 800.0,
        "break_even_probability": 0.0
      }
    },
    {
      "axis_value": 0.5,
      "evaluation": {
        "extra_qty": 0,
        "period_rate": 0.036986301369863014,
        "pull_unit_cost": 0.4,
        "push_unit_cost": 0.4,
        "holding_cost_total": 0.0,
        "stocking_rate_threshold": 0.3333333333333333,
        "result_if_sold_certain": 2000.0,
        "expected_result_if_sold": 1000.0,
        "expected_loss_if_unsold": 0.0,
        "expected_gain": 1000.0,
        "break_even_probability": 0.0
      }
    },
    {
      "axis_value": 0.6,
      "evaluation": {
        "extra_qty": 0,
        "period_rate": 0.036986301369863014,
        "pull_unit_cost": 0.4,
        "push_unit_cost": 0.4,
        "holding_cost_total": 0.0,
        "stocking_rate_threshold": 0.3333333333333333,
        "result_if_sold_certain": 2000.0,
        "expected_result_if_sold": 1200.0,
        "expected_loss_if_unsold": 0.0,
        "expected_gain": 1200.0,
        "break_even_probability": 0.0
      }
    },
    {
      "axis_value": 0.7,
      "evaluation": {
        "extra_qty": 0,
        "period_rate": 0.036986301369863014,
        "pull_unit_cost": 0.4,
        "push_unit_cost": 0.4,
        "holding_cost_total": 0.0,
        "stocking_rate_threshold": 0.3333333333333333,
        "result_if_sold_certain": 2000.0,
        "expected_result_if_sold": 1400.0,
        "expected_loss_if_unsold": 0.0,
        "expected_gain": 1400.0,
        "break_even_probability": 0.0
      }
    },
    {
      "axis_value": 0.8,
      "evaluation": {
        "extra_qty": 0,
        "period_rate": 0.036986301369863014,
        "pull_unit_cost": 0.4,
        "push_unit_cost": 0.4,
        "holding_cost_total": 0.0,
        "stocking_rate_threshold": 0.3333333333333333,
        "result_if_sold_certain": 2000.0,
        "expected_result_if_sold": 1600.0,
        "expected_loss_if_unsold": 0.0,
        "expected_gain": 1600.0,
        "break_even_probability": 0.0
      }
    },
    {
      "axis_value": 0.9,
      "evaluation": {
        "extra_qty": 0,
        "period_rate": 0.036986301369863014,
        "pull_unit_cost": 0.4,
        "push_unit_cost": 0.4,
        "holding_cost_total": 0.0,
        "stocking_rate_threshold": 0.3333333333333333,
        "result_if_sold_certain": 2000.0,
        "expected_result_if_sold": 1800.0,
        "expected_loss_if_unsold": 0.0,
        "expected_gain": 1800.0,
        "break_even_probability": 0.0
      }
    },
    {
      "axis_value": 1.0,
      "evaluation": {
        "extra_qty": 0,
        "period_rate": 0.036986301369863014,
        "pull_unit_cost": 0.4,
        "push_unit_cost": 0.4,
        "holding_cost_total": 0.0,
        "stocking_rate_threshold": 0.3333333333333333,
        "result_if_sold_certain": 2000.0,
        "expected_result_if_sold": 2000.0,
        "expected_loss_if_unsold": 0.0,
        "expected_gain": 2000.0,
        "break_even_probability": 0.0
      }
    }
  ]
};
