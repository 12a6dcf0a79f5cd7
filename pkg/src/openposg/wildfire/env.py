"""Wildfire environment dynamics."""
from __future__ import annotations

import math

from ..core.actions import NOOP, Action, JointAction
from ..core.environment import Environment, Event
from ..core.rng import RngStream
from .structures import (
    ACTIVE,
    BURNED_OUT,
    PUT_OUT,
    AgentGlimpse,
    Firefighter,
    FireTask,
    FireView,
    WildfireConfig,
    WildfireObservation,
    WildfireState,
    active_fires,
)

# Spread uses the 4-neighbourhood; fight adjacency uses Chebyshev distance <= 1.
ORTHOGONAL = ((-1, 0), (1, 0), (0, -1), (0, 1))


def _chebyshev(a: tuple[int, int], b: tuple[int, int]) -> int:
    return max(abs(a[0] - b[0]), abs(a[1] - b[1]))


class WildfireEnv(Environment):
    domain = "wildfire"

    def reset(self, config: WildfireConfig, seed: int) -> tuple[WildfireState, dict[str, WildfireObservation]]:
        config.validate()
        agents = tuple(
            Firefighter(
                agent=f"firefighter_{i}",
                position=spec.position,
                power=spec.power,
                suppressant=spec.capacity,
                capacity=spec.capacity,
            )
            for i, spec in enumerate(config.agents)
        )
        fires = tuple(
            FireTask(id=i, position=spec.position, agents_required=spec.agents_required, intensity=spec.intensity)
            for i, spec in enumerate(config.fires)
        )
        state = WildfireState(t=0, seed=seed, config=config, agents=agents, fires=fires, next_fire_id=len(fires))
        return state, self.observe(state, {})

    def roster(self, state: WildfireState) -> tuple[str, ...]:
        return tuple(ff.agent for ff in state.agents)

    def present_agents(self, state: WildfireState) -> tuple[str, ...]:
        return tuple(ff.agent for ff in state.agents if ff.present)

    def legal_actions(self, state: WildfireState, agent: str) -> tuple[Action, ...]:
        ff = self._agent(state, agent)
        if not ff.present or ff.suppressant <= 0:
            return (NOOP,)
        actions = [NOOP]
        for index, fire in enumerate(active_fires(state)):
            if _chebyshev(ff.position, fire.position) <= 1:
                actions.append(Action("fight", index))
        return tuple(actions)

    def transition(self, state: WildfireState, actions: JointAction, rng: RngStream) -> tuple[WildfireState, list[Event]]:
        config = state.config
        events: list[Event] = []
        ordered = active_fires(state)
        fires = {f.id: f for f in state.fires}

        # Phase 1: suppression.  A fire's intensity drops by floor(sum of the
        # attacking agents' powers) only when the attacking crew meets its
        # agents_required threshold; smaller crews have no effect.
        crews: dict[int, list[Firefighter]] = {}
        for ff in state.agents:
            action = actions.get(ff.agent, NOOP)
            if action.kind == "fight":
                crews.setdefault(ordered[action.target].id, []).append(ff)
        threshold_met: set[int] = set()
        for fire in ordered:
            crew = crews.get(fire.id, [])
            if len(crew) >= fire.agents_required:
                threshold_met.add(fire.id)
                reduction = math.floor(math.fsum(ff.power for ff in crew))
                intensity = max(0, fire.intensity - reduction)
                if intensity == 0:
                    fires[fire.id] = FireTask(fire.id, fire.position, fire.agents_required, 0, PUT_OUT)
                    events.append(
                        {
                            "kind": "putout",
                            "fire": fire.id,
                            "position": list(fire.position),
                            "agents_required": fire.agents_required,
                        }
                    )
                elif intensity != fire.intensity:
                    fires[fire.id] = FireTask(fire.id, fire.position, fire.agents_required, intensity, ACTIVE)
                    events.append({"kind": "suppressed", "fire": fire.id, "intensity": intensity})

        # Phase 2: suppressant bookkeeping.  Fighting costs one charge whether
        # or not it helped; a depleted agent leaves for refill_steps full steps
        # (its timer starts ticking on the next step) and returns full.
        agents = []
        for ff in state.agents:
            if not ff.present:
                timer = ff.refill_timer - 1
                if timer <= 0:
                    agents.append(Firefighter(ff.agent, ff.position, ff.power, ff.capacity, ff.capacity, True, 0))
                    events.append({"kind": "returned", "agent": ff.agent})
                else:
                    agents.append(Firefighter(ff.agent, ff.position, ff.power, ff.suppressant, ff.capacity, False, timer))
            elif actions.get(ff.agent, NOOP).kind == "fight":
                remaining = ff.suppressant - 1
                if remaining <= 0:
                    agents.append(
                        Firefighter(ff.agent, ff.position, ff.power, 0, ff.capacity, False, config.refill_steps)
                    )
                    events.append({"kind": "depleted", "agent": ff.agent})
                else:
                    agents.append(Firefighter(ff.agent, ff.position, ff.power, remaining, ff.capacity, True, 0))
            else:
                agents.append(ff)

        # Phase 3: intensification.  Fires whose threshold was not met this
        # step creep toward burnout; a fire never both shrinks and grows in
        # one step.
        intensify_rng = rng.substream("intensify", state.t)
        for fire in ordered:
            current = fires[fire.id]
            if current.status != ACTIVE or fire.id in threshold_met:
                continue
            if intensify_rng.random() < config.p_intensify:
                intensity = current.intensity + 1
                if intensity >= config.burnout_level:
                    fires[fire.id] = FireTask(fire.id, fire.position, fire.agents_required, config.burnout_level, BURNED_OUT)
                    events.append({"kind": "burnout", "fire": fire.id, "position": list(fire.position)})
                else:
                    fires[fire.id] = FireTask(fire.id, fire.position, fire.agents_required, intensity, ACTIVE)
                    events.append({"kind": "intensified", "fire": fire.id, "intensity": intensity})

        # Phase 4: spread.  Each still-active fire tries to ignite each empty
        # orthogonal neighbour.  Burned-out cells never reignite; put-out
        # cells may.  Fires created here do not spread until the next step.
        spread_rng = rng.substream("spread", state.t)
        occupied = {f.position for f in fires.values() if f.status == ACTIVE}
        dead_cells = {f.position for f in fires.values() if f.status == BURNED_OUT}
        next_fire_id = state.next_fire_id
        sources = [fires[f.id] for f in ordered if fires[f.id].status == ACTIVE]
        for fire in sources:
            y, x = fire.position
            for dy, dx in ORTHOGONAL:
                cell = (y + dy, x + dx)
                if not (0 <= cell[0] < config.grid_height and 0 <= cell[1] < config.grid_width):
                    continue
                if cell in occupied or cell in dead_cells:
                    continue
                if spread_rng.random() < config.p_spread:
                    required = spread_rng.weighted_choice(config.spawn_agents_required)
                    new_fire = FireTask(next_fire_id, cell, required, 1, ACTIVE)
                    fires[next_fire_id] = new_fire
                    occupied.add(cell)
                    events.append(
                        {
                            "kind": "ignition",
                            "fire": next_fire_id,
                            "position": list(cell),
                            "agents_required": required,
                        }
                    )
                    next_fire_id += 1

        next_state = WildfireState(
            t=state.t + 1,
            seed=state.seed,
            config=config,
            agents=tuple(agents),
            fires=tuple(fires[fid] for fid in sorted(fires)),
            next_fire_id=next_fire_id,
        )
        return next_state, events

    def reward(self, next_state: WildfireState, events: list[Event]) -> dict[str, float]:
        """Team scalar: +2^agents_required per putout, -1 per burnout, paid to
        every agent (absent ones included)."""
        team = 0.0
        for ev in events:
            if ev["kind"] == "putout":
                team += 2.0 ** ev["agents_required"]
            elif ev["kind"] == "burnout":
                team -= 1.0
        return {ff.agent: team for ff in next_state.agents}

    def observe(self, state: WildfireState, actions: JointAction) -> dict[str, WildfireObservation]:
        fire_views = tuple(
            FireView(index, fire.position, fire.agents_required, fire.intensity)
            for index, fire in enumerate(active_fires(state))
        )
        observations = {}
        for ff in state.agents:
            if not ff.present:
                observations[ff.agent] = WildfireObservation(ff.agent, absent=True, me=None, legal_actions=(NOOP,))
                continue
            others = tuple(
                AgentGlimpse(other.agent, other.position, other.present)
                for other in state.agents
                if other.agent != ff.agent
            )
            observations[ff.agent] = WildfireObservation(
                agent=ff.agent,
                absent=False,
                me=ff,
                others=others,
                fires=fire_views,
                legal_actions=self.legal_actions(state, ff.agent),
            )
        return observations

    def is_terminal(self, state: WildfireState) -> bool:
        return not any(f.status == ACTIVE for f in state.fires)

    def _agent(self, state: WildfireState, agent: str) -> Firefighter:
        for ff in state.agents:
            if ff.agent == agent:
                return ff
        raise KeyError(f"unknown agent {agent!r}")
